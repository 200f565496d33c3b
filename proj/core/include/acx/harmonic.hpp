#pragma once

#include <map>

#include "acx/operator_word.hpp"

namespace acx {

/// The Laplacians studied here, keyed the way they are printed:
/// four Bott-Chern/Aeppli type Laplacians for d, dc; the single
/// operator Laplacians; the delta family; and the symplectic pair.
enum class HarmonicOp {
  D,            // "d"
  Dc,           // "dc"
  DplusDc,      // "d+dc"
  DcplusD,      // "dc+d"
  DDc,          // "ddc"
  DcD,          // "dcd"
  Delta,        // "delta"
  DeltaBar,     // "deltabar"
  DeltaPlusBar, // "delta+deltabar"
  DeltaDeltaBar,// "deltadeltabar"
  DplusDLam,    // "d+dLam"
  DDLam,        // "ddLam"
};

std::string harmonic_op_name(HarmonicOp p);
std::optional<HarmonicOp> harmonic_op_from_name(const std::string& s);
/// All twelve, in report order.
const std::vector<HarmonicOp>& all_harmonic_ops();
bool op_needs_symplectic(HarmonicOp p);

/// Summands of the Laplacian Delta_P as operator words.
std::vector<OperatorWord> laplacian_words(HarmonicOp p);
/// First-order characterization of ker Delta_P: a form is P-harmonic
/// iff it lies in the kernel of every listed word.
std::vector<OperatorWord> harmonic_conditions(HarmonicOp p);

/// Exact matrix of Delta_P on degree-k forms; self-adjointness is
/// verified during assembly.
Matrix laplacian_matrix(const OperatorContext& ctx, HarmonicOp p, int k);

struct HarmonicSpace {
  HarmonicOp op;
  int degree = 0;
  Subspace space;  // over degree-k coordinates
  int h() const { return space.dim(); }
  std::vector<Form> basis_forms(const LieAlgebra& g) const;
};

/// Intersection of the characterizing kernels, cross-checked to equal
/// ker Delta_P (they agree exactly in finite dimension).
HarmonicSpace harmonic_space(const OperatorContext& ctx, HarmonicOp p, int k);

/// h^k_P table over the requested operators and degree range,
/// plus the invariant Betti row for comparison.
struct HTable {
  std::vector<int> degrees;
  std::vector<int> betti;
  std::vector<std::pair<HarmonicOp, std::vector<int>>> rows;
};
HTable h_table(const OperatorContext& ctx, const std::vector<HarmonicOp>& ops,
               int deg_lo, int deg_hi);

/// J maps H^k_{d+dc} onto H^k_{dc+d} and * maps H^k_{d+dc} onto
/// H^{2m-k}_{ddc} (and H^k_{dc+d} onto H^{2m-k}_{dcd}); verified as
/// equalities of canonical subspaces.
struct HarmonicIsoReport {
  bool j_iso = false;
  bool star_iso_bc = false;
  bool star_iso_dc = false;
  std::array<int, 4> dims{};  // h^k_{d+dc}, h^k_{dc+d}, h^{2m-k}_{ddc}, h^{2m-k}_{dcd}
  bool counts_equal = false;
  bool ok() const { return j_iso && star_iso_bc && star_iso_dc && counts_equal; }
};
HarmonicIsoReport harmonic_isomorphism_check(const OperatorContext& ctx, int k);

/// h^1_{d+dc} across several compatible metrics (must coincide),
/// with the h^k rows reported for comparison.
struct MetricIndependenceReport {
  std::vector<std::vector<int>> h_rows;  // one row per metric, degrees 0..n
  bool h1_equal = false;
  int h1 = -1;
};
MetricIndependenceReport metric_independence_probe(
    const AlmostComplex& acs, const std::vector<Metric>& metrics,
    const Symplectic* sympl = nullptr);

/// Almost Kahler 4-manifold package: the three-way decomposition of
/// H^2_{d+dc}, the count h^2 = b^- + 1 + h^-_J, the degree-3 equality
/// with d+dLam harmonic forms and the degree-2 inclusion.
struct AlmostKahlerReport {
  int h2 = 0, b_minus = 0, h_minus_j = 0;
  bool decomposition_ok = false;  // C<omega> + H^-_g + H^{(2,0)(0,2)}_J
  bool count_ok = false;          // h2 == b_minus + 1 + h_minus_j
  bool degree3_equal = false;     // H^3_{d+dc} == H^3_{d+dLam}
  bool degree2_included = false;  // H^2_{d+dc} <= H^2_{d+dLam}
  int h2_dlam = 0, h1_dlam = 0, h3 = 0, h3_dlam = 0;
  bool ok() const {
    return decomposition_ok && count_ok && degree3_equal && degree2_included;
  }
};
AlmostKahlerReport almost_kahler_checks(const OperatorContext& ctx);

/// Anti-self-dual d-harmonic 2-forms (dim = b^-) on 4-manifolds.
Subspace harmonic_asd_2forms(const OperatorContext& ctx);
/// d-harmonic forms of pure bidegree (2,0)+(0,2) (dim = h^-_J).
Subspace harmonic_j_anti_2forms(const OperatorContext& ctx);

}  // namespace acx
