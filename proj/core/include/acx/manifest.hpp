#pragma once

#include <memory>
#include <set>

#include "acx/cohomology.hpp"
#include "acx/coeff_ext.hpp"

namespace acx {

/// Declarative description of an invariant almost Hermitian structure:
/// structure equations in Salamon notation ("de^4 = -e^23" is encoded
/// as "-23" in slot 4), J as frame-matrix rows or as a (1,0)-coframe,
/// a metric choice and an optional symplectic form.
struct Manifest {
  std::string name;
  int dim = 0;
  std::vector<std::string> d;
  // Exactly one of the two should be set.
  std::optional<std::vector<std::vector<std::string>>> j_rows;
  std::optional<std::vector<std::vector<std::string>>> coframe;
  // "identity", "omega" (g = omega(., J.)), "coframe" (phi^j orthonormal)
  // or explicit gram rows.
  std::string metric_kind = "identity";
  std::optional<std::vector<std::vector<std::string>>> metric_rows;
  std::optional<std::string> omega;
  bool almost_kahler_expected = false;
  /// Value keys ("betti", "h:d+dc:1", ...) whose invariant-complex
  /// numbers agree with the full manifold values by published results.
  std::set<std::string> certified;
};

/// Salamon 2-form grammar: sum of terms or "0"; term is
/// [sign][rational '*'] pair; pair is two digits "23", or "(i,j)" for
/// indices above 9. Throws ParseError with a position on bad input.
Form parse_salamon_form(const std::string& text, int dim, int degree = 2);
std::string salamon_string(const Form& f);

Manifest parse_manifest(const std::string& json_text);
std::string print_manifest(const Manifest& m);  // canonical round-trip form

/// A manifest instantiated into exact objects. Validation failures
/// throw ValidationError (Jacobi with witness triple, J^2, metric
/// compatibility, omega closedness when almost Kahler is expected).
struct Model {
  Manifest manifest;
  std::unique_ptr<LieAlgebra> algebra;
  std::unique_ptr<AlmostComplex> acs;
  std::unique_ptr<Metric> metric;
  std::unique_ptr<Symplectic> symplectic;  // null when omega absent

  OperatorContext context() const {
    return OperatorContext(*acs, metric.get(), symplectic.get());
  }
};

Model build_model(const Manifest& m);

/// Built-in catalog: "kt", "torus_4", "torus_6" (any even "torus_<n>"),
/// "sol3_t@<rational>" with |t| <= 1/2, "nakamura_j1".
Manifest example_catalog(const std::string& name);
bool catalog_has(const std::string& name);
std::vector<std::string> catalog_names();

/// Compatible metric family used by the metric-independence probe:
/// index 0 is the manifest metric, further indices vary the Hermitian
/// products of the coframe.
Metric compatible_metric_variant(const AlmostComplex& acs, int index);

}  // namespace acx
