#pragma once

#include "acx/manifest.hpp"

namespace acx {

/// 64-bit FNV-1a over the bytes, rendered as 16 hex digits; used for
/// content addressing of manifests and cached reports.
std::string content_hash(const std::string& bytes);

struct ReportOptions {
  std::vector<HarmonicOp> ops;  // empty: sensible default set
  int deg_lo = 0, deg_hi = -1;  // -1: up to dim
  bool with_cohomology = true;
  bool with_checks = true;
};

/// Deterministic result table for one model: every numeric value
/// carries a provenance flag ("paper-certified" when the invariant
/// number is known to equal the manifold-level one, otherwise
/// "invariant-model").
struct Report {
  std::string name, hash;
  std::vector<int> betti;
  std::vector<std::pair<std::string, std::vector<int>>> h;
  std::vector<std::pair<std::string, std::vector<int>>> cohomology;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::pair<std::string, std::string>> provenance;
};

Report build_report(const Model& model, const ReportOptions& opt = {});

std::string report_to_json(const Report& r);
std::string report_to_markdown(const Report& r);
Report report_from_json(const std::string& text);

/// Content-addressed report cache: key = hash(manifest, metric,
/// command). A corrupt entry (payload hash mismatch) reads as a miss.
class ReportCache {
 public:
  explicit ReportCache(std::string dir) : dir_(std::move(dir)) {}

  static std::string key_for(const Manifest& m, const std::string& command);

  std::optional<Report> load(const std::string& key,
                             bool* corrupt = nullptr) const;
  void store(const std::string& key, const Report& r) const;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace acx
