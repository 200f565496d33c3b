// Command line front end: validate manifests, print invariant tables,
// cohomology dimensions, harmonic bases and the Kodaira-Thurston
// growth witness. Exit codes: 0 success, 1 validation failure,
// 2 parse failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acx/checks.hpp"
#include "acx/report.hpp"
#include "json.hpp"

namespace {

using namespace acx;

Manifest load_manifest(const std::string& source) {
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str());
  }
  if (catalog_has(source)) return example_catalog(source);
  throw ParseError("'" + source + "' is neither a file nor a catalog name");
}

std::pair<int, int> parse_degree_range(const std::string& s, int n) {
  const size_t dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int k = std::stoi(s);
      return {k, k};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("bad degree range '" + s + "'");
  }
  (void)n;
}

std::vector<HarmonicOp> parse_ops(const std::string& list) {
  std::vector<HarmonicOp> ops;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto op = harmonic_op_from_name(item);
    if (!op) throw ParseError("unknown operator '" + item + "'");
    ops.push_back(*op);
  }
  if (ops.empty()) throw ParseError("empty operator list");
  return ops;
}

std::string cache_dir_override(const std::string& flag_value) {
  if (const char* env = std::getenv("ACX_CACHE"); env && *env) return env;
  return flag_value;
}

int cmd_check(const std::string& file) {
  const Manifest m = load_manifest(file);
  const Model model = build_model(m);
  nlohmann::json j;
  j["name"] = m.name;
  j["hash"] = content_hash(print_manifest(m));
  j["dim"] = m.dim;
  j["checks"] = {{"jacobi", true},
                 {"unimodular", model.algebra->unimodular()},
                 {"j_squared", true},
                 {"metric_compatible", true}};
  if (model.symplectic) {
    j["checks"]["omega_closed"] = model.symplectic->closed();
    j["checks"]["almost_kahler"] =
        model.symplectic->almost_kahler(*model.acs, *model.metric);
  }
  j["nijenhuis_rank"] = model.acs->nijenhuis_rank();
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_invariants(const std::string& file, const std::string& ops_list,
                   const std::string& degrees, const std::string& metric_file) {
  const Manifest m = load_manifest(file);
  Model model = build_model(m);
  if (!metric_file.empty()) {
    std::ifstream in(metric_file);
    if (!in) throw ParseError("cannot open metric file '" + metric_file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("metric file: ") + e.what());
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : j.at("gram")) {
      std::vector<std::string> r;
      for (const auto& cell : row)
        r.push_back(cell.is_string() ? cell.get<std::string>()
                                     : std::to_string(cell.get<long long>()));
      rows.push_back(std::move(r));
    }
    Matrix gram(m.dim, m.dim);
    for (int i = 0; i < m.dim; ++i)
      for (int jj = 0; jj < m.dim; ++jj)
        gram.at(i, jj) = scalar_from_string(rows[i][jj]);
    model.metric = std::make_unique<Metric>(*model.acs, gram);
  }
  ReportOptions opt;
  opt.with_cohomology = false;
  opt.with_checks = false;
  if (!ops_list.empty()) opt.ops = parse_ops(ops_list);
  if (!degrees.empty()) {
    const auto [lo, hi] = parse_degree_range(degrees, m.dim);
    if (lo < 0 || hi > m.dim || lo > hi)
      throw ParseError("degree range outside 0.." + std::to_string(m.dim));
    opt.deg_lo = lo;
    opt.deg_hi = hi;
  }
  std::cout << report_to_json(build_report(model, opt));
  return 0;
}

int cmd_cohomology(const std::string& file) {
  const Model model = build_model(load_manifest(file));
  ReportOptions opt;
  opt.ops = {HarmonicOp::DplusDc, HarmonicOp::DcplusD, HarmonicOp::DDc,
             HarmonicOp::DcD};
  opt.with_checks = false;
  std::cout << report_to_json(build_report(model, opt));
  return 0;
}

int cmd_harmonic(const std::string& file, const std::string& op_name,
                 int degree, bool with_basis) {
  const Model model = build_model(load_manifest(file));
  const auto op = harmonic_op_from_name(op_name);
  if (!op) throw ParseError("unknown operator '" + op_name + "'");
  if (degree < 0 || degree > model.manifest.dim)
    throw ParseError("degree out of range");
  const OperatorContext ctx = model.context();
  const HarmonicSpace hs = harmonic_space(ctx, *op, degree);
  nlohmann::json j;
  j["name"] = model.manifest.name;
  j["hash"] = content_hash(print_manifest(model.manifest));
  j["op"] = op_name;
  j["degree"] = degree;
  j["h"] = hs.h();
  j["provenance"] =
      model.manifest.certified.count("h:" + op_name + ":" +
                                     std::to_string(degree))
          ? "paper-certified"
          : "invariant-model";
  if (with_basis) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& f : hs.basis_forms(*model.algebra)) {
      nlohmann::json entry;
      entry["frame"] = f.str();
      entry["phi"] = model.acs->phi_str(f);
      basis.push_back(entry);
    }
    j["basis"] = basis;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_witness(int maxfreq) {
  if (maxfreq < 0) throw ParseError("max frequency must be >= 0");
  const Manifest m = example_catalog("kt");
  const Model model = build_model(m);
  nlohmann::json j;
  j["name"] = "kt";
  j["hash"] = content_hash(print_manifest(m));
  nlohmann::json dims = nlohmann::json::array();
  int prev = -1;
  bool strict = true;
  for (int f = 0; f <= maxfreq; ++f) {
    const int d = bc_growth_witness(*model.acs, f);
    if (f > 0 && d <= prev) strict = false;
    prev = d;
    dims.push_back(d);
  }
  j["witness"] = {{"max_frequency", maxfreq},
                  {"dims", dims},
                  {"strictly_increasing_from_1", strict}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_report(const std::string& file, const std::string& format,
               const std::string& cache_dir) {
  const Manifest m = load_manifest(file);
  const std::string dir = cache_dir_override(cache_dir);
  Report rep;
  bool from_cache = false;
  const std::string key = ReportCache::key_for(m, "report");
  if (!dir.empty()) {
    ReportCache cache(dir);
    bool corrupt = false;
    if (auto cached = cache.load(key, &corrupt)) {
      rep = *cached;
      from_cache = true;
    } else if (corrupt) {
      std::cerr << "warning: corrupt cache entry " << key
                << ", recomputing\n";
    }
  }
  if (!from_cache) {
    rep = build_report(build_model(m));
    if (!dir.empty()) ReportCache(dir).store(key, rep);
  }
  if (format == "md")
    std::cout << report_to_markdown(rep);
  else
    std::cout << report_to_json(rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant-cohomology engine for almost complex "
               "structures on Lie group quotients"};
  app.require_subcommand(1);

  std::string file, ops, degrees, metric_file, op_name, format = "json";
  std::string cache_dir;
  int degree = 0, maxfreq = 3;
  bool with_basis = false;

  auto* check = app.add_subcommand("check", "Validate a manifest");
  check->add_option("file", file, "Manifest file or catalog name")->required();

  auto* inv = app.add_subcommand("invariants", "Harmonic dimension tables");
  inv->add_option("file", file)->required();
  inv->add_option("--ops", ops, "Comma-separated operator list");
  inv->add_option("--degrees", degrees, "Degree k or range a..b");
  inv->add_option("--metric", metric_file, "JSON file with a gram override");

  auto* coh = app.add_subcommand("cohomology", "Cohomology dimension tables");
  coh->add_option("file", file)->required();

  auto* har = app.add_subcommand("harmonic", "One harmonic space");
  har->add_option("file", file)->required();
  har->add_option("--op", op_name, "Operator tag, e.g. d+dc")->required();
  har->add_option("--degree", degree, "Form degree")->required();
  har->add_flag("--basis", with_basis, "Print the harmonic basis");

  auto* wit = app.add_subcommand("witness-kt",
                                 "Bott-Chern growth witness on the "
                                 "Kodaira-Thurston structure");
  wit->add_option("--max-frequency", maxfreq, "Trig truncation cap")
      ->required();

  auto* rep = app.add_subcommand("report", "Full report (json or markdown)");
  rep->add_option("file", file)->required();
  rep->add_option("--format", format, "json|md");
  rep->add_option("--cache", cache_dir, "Cache directory (ACX_CACHE wins)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file);
    if (inv->parsed()) return cmd_invariants(file, ops, degrees, metric_file);
    if (coh->parsed()) return cmd_cohomology(file);
    if (har->parsed()) return cmd_harmonic(file, op_name, degree, with_basis);
    if (wit->parsed()) return cmd_witness(maxfreq);
    if (rep->parsed()) return cmd_report(file, format, cache_dir);
  } catch (const acx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const acx::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
