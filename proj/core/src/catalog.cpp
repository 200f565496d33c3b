#include "acx/manifest.hpp"

namespace acx {

namespace {

std::string rat_str(const Rat& r) { return rat_to_string(r); }

Manifest kt_manifest() {
  Manifest m;
  m.name = "kt";
  m.dim = 4;
  m.d = {"0", "0", "0", "-23"};
  // Frame action J e1 = e2, J e2 = -e1, J e3 = e4, J e4 = -e3.
  m.j_rows = std::vector<std::vector<std::string>>{
      {"0", "-1", "0", "0"},
      {"1", "0", "0", "0"},
      {"0", "0", "0", "-1"},
      {"0", "0", "1", "0"}};
  m.metric_kind = "identity";
  m.omega = "12+34";
  m.almost_kahler_expected = true;
  m.certified = {"betti",
                 "h:d+dc:0", "h:d+dc:1", "h:d+dc:2", "h:d+dc:3", "h:d+dc:4",
                 "h:d+dLam:1", "h:d+dLam:2",
                 "cohomology:d+dc:0", "cohomology:d+dc:1",
                 "cohomology:ddc:3", "cohomology:ddc:4"};
  return m;
}

Manifest torus_manifest(int dim) {
  Manifest m;
  m.name = "torus_" + std::to_string(dim);
  m.dim = dim;
  std::string omega;
  for (int k = 0; k < dim; ++k) m.d.push_back("0");
  std::vector<std::vector<std::string>> j(
      static_cast<size_t>(dim), std::vector<std::string>(static_cast<size_t>(dim), "0"));
  for (int b = 0; b < dim / 2; ++b) {
    j[static_cast<size_t>(2 * b)][static_cast<size_t>(2 * b + 1)] = "-1";
    j[static_cast<size_t>(2 * b + 1)][static_cast<size_t>(2 * b)] = "1";
    if (!omega.empty()) omega += "+";
    if (dim > 9)
      omega += "(" + std::to_string(2 * b + 1) + "," + std::to_string(2 * b + 2) + ")";
    else
      omega += std::to_string(2 * b + 1) + std::to_string(2 * b + 2);
  }
  m.j_rows = std::move(j);
  m.metric_kind = "identity";
  m.omega = omega;
  m.almost_kahler_expected = true;
  return m;
}

Manifest sol3_manifest(const Rat& t) {
  if (t > Rat(1, 2) || t < Rat(-1, 2))
    throw ValidationError(
        "sol3_t is exposed for |t| <= 1/2 (the family is almost Kahler "
        "there; no rational t in range degenerates)");
  Manifest m;
  m.name = "sol3_t@" + rat_str(t);
  m.dim = 4;
  m.d = {"0", "0", "-13", "14"};
  const Rat den = Rat(1) - t * t;
  const Rat a = (Rat(1) + t * t) / den;  // coefficient of i e^2 / i e^4
  const Rat b = Rat(2) * t / den;
  // phi^1_t = e1 + i(a e2 - b e4), phi^2_t = e3 + i(b e2 + a e4),
  // the coframe whose derived quantities (the mubar relation g = c_t f
  // with c_t = t(1+t^2)/(1+4t^2+t^4), the e^4 expansion, the harmonic
  // counts) all hold exactly. For t != 0 this J_t is not compatible
  // with omega = e^12+e^34 under the form-action convention used here,
  // so the structure ships with a coframe-orthonormal metric instead
  // and the almost Kahler flag stays off away from t = 0.
  m.coframe = std::vector<std::vector<std::string>>{
      {"1", rat_str(a) + "i", "0", rat_str(-b) + "i"},
      {"0", rat_str(b) + "i", "1", rat_str(a) + "i"}};
  m.omega = "12+34";
  if (t == 0) {
    m.metric_kind = "omega";
    m.almost_kahler_expected = true;
  } else {
    m.metric_kind = "coframe";
    m.almost_kahler_expected = false;
  }
  m.certified = {"h:d+dc:1"};
  return m;
}

Manifest nakamura_manifest() {
  Manifest m;
  m.name = "nakamura_j1";
  m.dim = 6;
  // Underlying real structure equations of the complex parallelizable
  // solvmanifold with d w^2 = -w^12, d w^3 = w^13.
  m.d = {"0", "0", "-13+24", "-14-23", "15-26", "16+25"};
  // J_1 coframe: w^1 = phi^1, w^2 = phi^2 + conj(phi^3), w^3 = phi^3
  // with phi^j = e^{2j-1} + i e^{2j}.
  m.coframe = std::vector<std::vector<std::string>>{
      {"1", "i", "0", "0", "0", "0"},
      {"0", "0", "1", "i", "1", "-i"},
      {"0", "0", "0", "0", "1", "i"}};
  m.metric_kind = "coframe";
  m.certified = {"h:d+dc:1"};
  return m;
}

}  // namespace

bool catalog_has(const std::string& name) {
  if (name == "kt" || name == "nakamura_j1") return true;
  if (name.rfind("torus_", 0) == 0) return true;
  if (name.rfind("sol3_t@", 0) == 0 || name == "sol3_t") return true;
  return false;
}

std::vector<std::string> catalog_names() {
  return {"kt", "torus_4", "torus_6", "sol3_t@<t>", "nakamura_j1"};
}

Manifest example_catalog(const std::string& name) {
  if (name == "kt") return kt_manifest();
  if (name == "nakamura_j1") return nakamura_manifest();
  if (name.rfind("torus_", 0) == 0) {
    int dim = 0;
    try {
      dim = std::stoi(name.substr(6));
    } catch (const std::exception&) {
      throw ParseError("bad torus name '" + name + "'");
    }
    if (dim < 2 || dim % 2 != 0 || dim > 12)
      throw ValidationError("torus dimension must be even, 2..12");
    return torus_manifest(dim);
  }
  if (name == "sol3_t") return sol3_manifest(Rat(0));
  if (name.rfind("sol3_t@", 0) == 0) {
    Rat t;
    try {
      t = rat_from_string(name.substr(7));
    } catch (const std::exception&) {
      throw ParseError("bad sol3_t parameter in '" + name + "'");
    }
    return sol3_manifest(t);
  }
  throw ParseError("unknown catalog name '" + name + "'");
}

}  // namespace acx
