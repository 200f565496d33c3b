#include "acx/manifest.hpp"

#include <sstream>

#include "json.hpp"

namespace acx {

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos,
                             const std::string& why) {
  throw ParseError("parse error at position " + std::to_string(pos) + ": " +
                   why + " in '" + text + "'");
}

// pair := two digits "23" | "(i,j)"
std::pair<int, int> parse_pair(const std::string& s, size_t& i) {
  if (i < s.size() && s[i] == '(') {
    size_t close = s.find(')', i);
    if (close == std::string::npos) parse_fail(s, i, "unclosed '('");
    const std::string inner = s.substr(i + 1, close - i - 1);
    const size_t comma = inner.find(',');
    if (comma == std::string::npos) parse_fail(s, i, "expected '(i,j)'");
    int a = 0, b = 0;
    try {
      a = std::stoi(inner.substr(0, comma));
      b = std::stoi(inner.substr(comma + 1));
    } catch (const std::exception&) {
      parse_fail(s, i, "bad index pair");
    }
    i = close + 1;
    return {a, b};
  }
  if (i + 1 >= s.size() || !isdigit(static_cast<unsigned char>(s[i])) ||
      !isdigit(static_cast<unsigned char>(s[i + 1])))
    parse_fail(s, i, "expected an index pair");
  const int a = s[i] - '0', b = s[i + 1] - '0';
  i += 2;
  return {a, b};
}

}  // namespace

Form parse_salamon_form(const std::string& raw, int dim, int degree) {
  if (degree != 2)
    throw std::invalid_argument("Salamon grammar encodes 2-forms");
  std::string s;
  for (char c : raw)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) parse_fail(raw, 0, "empty term list");
  Form f(dim, 2);
  if (s == "0") return f;
  size_t i = 0;
  while (i < s.size()) {
    Rat sign(1);
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    Rat mag(1);
    // optional rational followed by '*'
    size_t j = i;
    while (j < s.size() && (isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/'))
      ++j;
    if (j < s.size() && s[j] == '*') {
      try {
        mag = rat_from_string(s.substr(i, j - i));
      } catch (const std::exception&) {
        parse_fail(raw, i, "bad rational coefficient");
      }
      i = j + 1;
    }
    const auto [a, b] = parse_pair(s, i);
    if (a < 1 || b < 1 || a > dim || b > dim || a == b)
      parse_fail(raw, i, "index pair out of range");
    Word w = word_from_indices(a < b ? std::vector<int>{a, b}
                                     : std::vector<int>{b, a});
    Rat coeff = sign * mag;
    if (a > b) coeff = -coeff;
    f.set_coeff(w, f.coeff(w) + Scalar(coeff));
  }
  return f;
}

std::string salamon_string(const Form& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool wide = f.n() > 9;
  FormBasis basis(f.n(), 2);
  for (int i = 0; i < basis.size(); ++i) {
    const Scalar c = f.coeff(basis.word(i));
    if (c.is_zero()) continue;
    if (!c.is_real())
      throw std::invalid_argument("Salamon strings encode real 2-forms");
    const Rat& r = c.re;
    const Rat mag = r < 0 ? Rat(-r) : r;
    os << (r < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1) os << rat_to_string(mag) << "*";
    const auto idx = word_indices(basis.word(i));
    if (wide)
      os << "(" << idx[0] << "," << idx[1] << ")";
    else
      os << idx[0] << idx[1];
    first = false;
  }
  return os.str();
}

namespace {

using nlohmann::json;

std::vector<std::vector<std::string>> string_grid(const json& j,
                                                  const char* what) {
  std::vector<std::vector<std::string>> out;
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  for (const auto& row : j) {
    std::vector<std::string> r;
    if (!row.is_array())
      throw ParseError(std::string(what) + " rows must be arrays");
    for (const auto& cell : row) {
      if (cell.is_string())
        r.push_back(cell.get<std::string>());
      else if (cell.is_number_integer())
        r.push_back(std::to_string(cell.get<long long>()));
      else
        throw ParseError(std::string(what) +
                         " entries must be strings or integers");
    }
    out.push_back(std::move(r));
  }
  return out;
}

json grid_to_json(const std::vector<std::vector<std::string>>& g) {
  json out = json::array();
  for (const auto& row : g) out.push_back(row);
  return out;
}

Matrix parse_scalar_grid(const std::vector<std::vector<std::string>>& rows,
                         int r, int c, const char* what) {
  if (rows.size() != static_cast<size_t>(r))
    throw ParseError(std::string(what) + " has wrong row count");
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (rows[static_cast<size_t>(i)].size() != static_cast<size_t>(c))
      throw ParseError(std::string(what) + " has wrong column count");
    for (int j = 0; j < c; ++j) {
      try {
        m.at(i, j) =
            scalar_from_string(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      } catch (const std::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
      }
    }
  }
  return m;
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("manifest is not valid JSON: ") + e.what());
  }
  Manifest m;
  try {
    m.name = j.at("name").get<std::string>();
    m.dim = j.at("dim").get<int>();
    if (m.dim < 2 || m.dim % 2 != 0 || m.dim > 30)
      throw ParseError("dim must be even and small");
    for (const auto& line : j.at("d")) m.d.push_back(line.get<std::string>());
    if (m.d.size() != static_cast<size_t>(m.dim))
      throw ParseError("need one Salamon string per coframe element");
    if (j.contains("J")) m.j_rows = string_grid(j["J"], "J");
    if (j.contains("coframe10"))
      m.coframe = string_grid(j["coframe10"], "coframe10");
    if (!m.j_rows == !m.coframe)
      throw ParseError("exactly one of J or coframe10 is required");
    if (j.contains("metric")) {
      if (j["metric"].is_string())
        m.metric_kind = j["metric"].get<std::string>();
      else {
        m.metric_kind = "rows";
        m.metric_rows = string_grid(j["metric"], "metric");
      }
    }
    if (j.contains("omega")) m.omega = j["omega"].get<std::string>();
    if (j.contains("flags") && j["flags"].contains("almost_kahler"))
      m.almost_kahler_expected = j["flags"]["almost_kahler"].get<bool>();
    if (j.contains("certified"))
      for (const auto& key : j["certified"])
        m.certified.insert(key.get<std::string>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad manifest: ") + e.what());
  }
  return m;
}

std::string print_manifest(const Manifest& m) {
  json j;
  j["name"] = m.name;
  j["dim"] = m.dim;
  j["d"] = m.d;
  if (m.j_rows) j["J"] = grid_to_json(*m.j_rows);
  if (m.coframe) j["coframe10"] = grid_to_json(*m.coframe);
  if (m.metric_kind == "rows")
    j["metric"] = grid_to_json(*m.metric_rows);
  else
    j["metric"] = m.metric_kind;
  if (m.omega) j["omega"] = *m.omega;
  j["flags"] = json{{"almost_kahler", m.almost_kahler_expected}};
  if (!m.certified.empty()) {
    json c = json::array();
    for (const auto& k : m.certified) c.push_back(k);
    j["certified"] = c;
  }
  return j.dump(2);
}

Model build_model(const Manifest& m) {
  Model out;
  out.manifest = m;
  std::vector<Form> dcof;
  for (int k = 0; k < m.dim; ++k)
    dcof.push_back(parse_salamon_form(m.d[static_cast<size_t>(k)], m.dim));
  out.algebra = std::make_unique<LieAlgebra>(
      LieAlgebra::from_coframe_differentials(std::move(dcof)));
  if (const auto witness = out.algebra->jacobi_witness()) {
    const auto [a, b, c] = *witness;
    throw ValidationError("Jacobi identity fails on the triple (" +
                          std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")");
  }
  if (m.j_rows) {
    const Matrix j = parse_scalar_grid(*m.j_rows, m.dim, m.dim, "J");
    out.acs = std::make_unique<AlmostComplex>(*out.algebra, j);
  } else {
    const Matrix cof =
        parse_scalar_grid(*m.coframe, m.dim / 2, m.dim, "coframe10");
    out.acs = std::make_unique<AlmostComplex>(
        AlmostComplex::from_coframe(*out.algebra, cof));
  }
  if (m.omega) {
    out.symplectic = std::make_unique<Symplectic>(
        *out.algebra, parse_salamon_form(*m.omega, m.dim));
    if (m.almost_kahler_expected && !out.symplectic->closed())
      throw ValidationError("omega is not closed but almost_kahler was set");
  }
  if (m.metric_kind == "identity") {
    out.metric = std::make_unique<Metric>(Metric::frame_identity(*out.acs));
  } else if (m.metric_kind == "omega") {
    if (!out.symplectic)
      throw ValidationError("metric 'omega' needs an omega entry");
    out.metric = std::make_unique<Metric>(
        *out.acs, out.symplectic->compatible_gram(*out.acs));
  } else if (m.metric_kind == "coframe") {
    out.metric = std::make_unique<Metric>(Metric::from_coframe_hermitian(
        *out.acs, Matrix::identity(m.dim / 2)));
  } else if (m.metric_kind == "rows") {
    out.metric = std::make_unique<Metric>(
        *out.acs, parse_scalar_grid(*m.metric_rows, m.dim, m.dim, "metric"));
  } else {
    throw ParseError("unknown metric kind '" + m.metric_kind + "'");
  }
  if (m.almost_kahler_expected &&
      (!out.symplectic ||
       !out.symplectic->almost_kahler(*out.acs, *out.metric)))
    throw ValidationError("manifest expects an almost Kahler triple");
  return out;
}

Metric compatible_metric_variant(const AlmostComplex& acs, int index) {
  const int m = acs.m();
  Matrix h = Matrix::identity(m);
  switch (index % 4) {
    case 0:
      break;
    case 1:
      for (int i = 0; i < m; ++i) h.at(i, i) = Scalar(1 + i + index / 4);
      break;
    case 2:
      // Rescale; a genuinely different metric with the same shape.
      h = Scalar(4) * h;
      break;
    case 3:
      // Hermitian with an off-diagonal complex entry, still positive.
      if (m >= 2) {
        h.at(0, 1) = Scalar(0, 1, 1, 2);
        h.at(1, 0) = Scalar(0, 1, -1, 2);
        h.at(0, 0) = Scalar(2);
      }
      break;
  }
  return Metric::from_coframe_hermitian(acs, h);
}

}  // namespace acx
