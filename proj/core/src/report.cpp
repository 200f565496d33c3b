#include "acx/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "acx/checks.hpp"
#include "json.hpp"

namespace acx {

std::string content_hash(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
  return os.str();
}

namespace {

using nlohmann::json;

std::string provenance_for(const Manifest& m, const std::string& key) {
  return m.certified.count(key) ? "paper-certified" : "invariant-model";
}

}  // namespace

Report build_report(const Model& model, const ReportOptions& opt) {
  Report r;
  const int n = model.algebra->dim();
  r.name = model.manifest.name;
  r.hash = content_hash(print_manifest(model.manifest));
  r.betti = model.algebra->betti();
  r.provenance.emplace_back("betti", provenance_for(model.manifest, "betti"));

  std::vector<HarmonicOp> ops = opt.ops;
  if (ops.empty()) {
    ops = {HarmonicOp::D,        HarmonicOp::Dc,
           HarmonicOp::DplusDc,  HarmonicOp::DcplusD,
           HarmonicOp::DDc,      HarmonicOp::DcD,
           HarmonicOp::Delta,    HarmonicOp::DeltaBar,
           HarmonicOp::DeltaPlusBar, HarmonicOp::DeltaDeltaBar};
    if (model.symplectic) {
      ops.push_back(HarmonicOp::DplusDLam);
      ops.push_back(HarmonicOp::DDLam);
    }
  }
  const int lo = opt.deg_lo;
  const int hi = opt.deg_hi < 0 ? n : opt.deg_hi;
  const OperatorContext ctx = model.context();
  const HTable table = h_table(ctx, ops, lo, hi);
  for (const auto& [op, row] : table.rows) {
    const std::string name = harmonic_op_name(op);
    r.h.emplace_back(name, row);
    for (size_t i = 0; i < row.size(); ++i)
      r.provenance.emplace_back(
          "h:" + name + ":" + std::to_string(lo + static_cast<int>(i)),
          provenance_for(model.manifest,
                         "h:" + name + ":" + std::to_string(lo + static_cast<int>(i))));
  }

  if (opt.with_cohomology) {
    Cohomology cohom(*model.acs);
    auto add_row = [&](const std::string& tag, auto getter) {
      std::vector<int> row;
      for (int k = 0; k <= n; ++k) row.push_back(getter(k));
      r.cohomology.emplace_back(tag, row);
      for (int k = 0; k <= n; ++k)
        r.provenance.emplace_back(
            "cohomology:" + tag + ":" + std::to_string(k),
            provenance_for(model.manifest,
                           "cohomology:" + tag + ":" + std::to_string(k)));
    };
    add_row("dR", [&](int k) { return cohom.de_rham(k).dim; });
    add_row("dc", [&](int k) { return cohom.dc_cohomology(k).dim; });
    add_row("d+dc", [&](int k) { return cohom.bott_chern(k).dim; });
    add_row("ddc", [&](int k) { return cohom.aeppli(k).dim; });
    add_row("delta", [&](int k) { return cohom.delta_cohomology(k, false).dim; });
    add_row("deltabar", [&](int k) { return cohom.delta_cohomology(k, true).dim; });
    add_row("delta+deltabar",
            [&](int k) { return cohom.delta_bott_chern(k).dim; });
    add_row("deltadeltabar", [&](int k) { return cohom.delta_aeppli(k).dim; });
    add_row("ev", [&](int k) { return cohom.even_cohomology(k).dim; });
    add_row("od", [&](int k) { return cohom.odd_cohomology(k).dim; });
    add_row("BC_ev", [&](int k) { return cohom.bc_splitting(k).even.dim; });
    add_row("BC_od", [&](int k) { return cohom.bc_splitting(k).odd.dim; });
  }

  if (opt.with_checks) {
    r.checks.emplace_back("jacobi", model.algebra->jacobi_ok());
    r.checks.emplace_back("unimodular", model.algebra->unimodular());
    if (model.symplectic) {
      r.checks.emplace_back("omega_nondegenerate", true);
      r.checks.emplace_back("omega_closed", model.symplectic->closed());
      r.checks.emplace_back(
          "almost_kahler_matches_expectation",
          model.symplectic->almost_kahler(*model.acs, *model.metric) ==
              model.manifest.almost_kahler_expected);
    }
    for (const auto& item : operator_identity_checks(ctx).items)
      r.checks.push_back(item);
    if (opt.with_cohomology) {
      Cohomology cohom(*model.acs);
      for (const auto& item : cohomology_checks(ctx, cohom).items)
        r.checks.push_back(item);
    }
  }
  return r;
}

std::string report_to_json(const Report& r) {
  json j;
  j["name"] = r.name;
  j["hash"] = r.hash;
  j["betti"] = r.betti;
  json h = json::object();
  for (const auto& [k, v] : r.h) h[k] = v;
  j["h"] = h;
  json c = json::object();
  for (const auto& [k, v] : r.cohomology) c[k] = v;
  j["cohomology"] = c;
  json ck = json::object();
  for (const auto& [k, v] : r.checks) ck[k] = v;
  j["checks"] = ck;
  json pv = json::object();
  for (const auto& [k, v] : r.provenance) pv[k] = v;
  j["provenance"] = pv;
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  const json j = json::parse(text);
  Report r;
  r.name = j.at("name").get<std::string>();
  r.hash = j.at("hash").get<std::string>();
  r.betti = j.at("betti").get<std::vector<int>>();
  for (const auto& [k, v] : j.at("h").items())
    r.h.emplace_back(k, v.get<std::vector<int>>());
  for (const auto& [k, v] : j.at("cohomology").items())
    r.cohomology.emplace_back(k, v.get<std::vector<int>>());
  for (const auto& [k, v] : j.at("checks").items())
    r.checks.emplace_back(k, v.get<bool>());
  for (const auto& [k, v] : j.at("provenance").items())
    r.provenance.emplace_back(k, v.get<std::string>());
  return r;
}

std::string report_to_markdown(const Report& r) {
  std::ostringstream os;
  const size_t n = r.betti.size() - 1;
  os << "# " << r.name << "\n\n";
  os << "content hash: `" << r.hash << "`\n\n";
  auto table = [&](const std::string& title,
                   const std::vector<std::pair<std::string, std::vector<int>>>&
                       rows) {
    if (rows.empty()) return;
    os << "## " << title << "\n\n| |";
    for (size_t k = 0; k <= n; ++k) os << " k=" << k << " |";
    os << "\n|---|";
    for (size_t k = 0; k <= n; ++k) os << "---|";
    os << "\n| b_k |";
    for (int b : r.betti) os << " " << b << " |";
    os << "\n";
    for (const auto& [name, row] : rows) {
      os << "| " << name << " |";
      for (int v : row) os << " " << v << " |";
      for (size_t k = row.size(); k <= n; ++k) os << " |";
      os << "\n";
    }
    os << "\n";
  };
  table("harmonic dimensions h^k_P", r.h);
  table("cohomology dimensions", r.cohomology);
  if (!r.checks.empty()) {
    os << "## checks\n\n";
    for (const auto& [k, v] : r.checks)
      os << "- " << (v ? "[ok] " : "[FAIL] ") << k << "\n";
    os << "\n";
  }
  os << "Values marked invariant-model are dimensions of the invariant\n"
        "complex; paper-certified values agree with the full manifold.\n";
  return os.str();
}

std::string ReportCache::key_for(const Manifest& m,
                                 const std::string& command) {
  std::string metric_desc = m.metric_kind;
  if (m.metric_rows)
    for (const auto& row : *m.metric_rows)
      for (const auto& cell : row) metric_desc += "," + cell;
  return content_hash(print_manifest(m) + "\x1f" + metric_desc + "\x1f" +
                      command);
}

std::string ReportCache::path_for(const std::string& key) const {
  return dir_ + "/" + key + ".json";
}

std::optional<Report> ReportCache::load(const std::string& key,
                                        bool* corrupt) const {
  if (corrupt) *corrupt = false;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
    const std::string payload = j.at("payload").dump();
    if (j.at("payload_hash").get<std::string>() != content_hash(payload)) {
      if (corrupt) *corrupt = true;
      return std::nullopt;
    }
    return report_from_json(payload);
  } catch (const std::exception&) {
    if (corrupt) *corrupt = true;
    return std::nullopt;
  }
}

void ReportCache::store(const std::string& key, const Report& r) const {
  std::filesystem::create_directories(dir_);
  const json payload = json::parse(report_to_json(r));
  json j;
  j["key"] = key;
  j["payload"] = payload;
  j["payload_hash"] = content_hash(payload.dump());
  std::ofstream out(path_for(key));
  out << j.dump(2) << "\n";
}

}  // namespace acx
