#pragma once

#include "acx/harmonic.hpp"

namespace acx {

enum class ComplexTag { Full, B, C };

struct CohomologySpace {
  std::string tag;
  int degree = 0;
  ComplexTag complex_tag = ComplexTag::Full;
  int dim = 0;
  std::vector<Form> reps;  // canonical representatives in Lambda^k
};

struct DiagramReport {
  // Ranks/dims of the five maps of the cohomology diagram.
  int dim_bc = 0, dim_dr = 0, dim_dc = 0, dim_a = 0;
  int rank_bc_to_dr = 0, rank_bc_to_dc = 0;
  int rank_dr_to_a = 0, rank_dc_to_a = 0;
  bool j_iso_ok = false;
  bool square_commutes = false;
};

struct PairingCheck {
  bool well_defined = false;   // class unchanged under representative moves
  bool unit_acts_trivially = false;
  int pairing_class_dim = 0;
};

/// All invariant-complex cohomologies of (g, J): de Rham and d^c, the
/// Bott-Chern/Aeppli pair on the complexes B and C, the delta family,
/// J-even/J-odd and the parity splitting of Bott-Chern cohomology.
///
/// Everything here models the invariant complex; whether a value also
/// computes the full cohomology of a compact quotient is a statement
/// about the specific geometry and is tracked by the reporting layer,
/// not assumed here.
class Cohomology {
 public:
  explicit Cohomology(const AlmostComplex& acs);

  const AlmostComplex& acs() const { return *acs_; }
  const LieAlgebra& algebra() const { return acs_->algebra(); }
  int n() const { return acs_->n(); }

  // --- the subcomplex B^k = ker(ddc + dcd) and quotient complex C^k ---
  const Subspace& b_space(int k) const;
  /// Restricted operator in B-coordinates, degree k -> k+1.
  Matrix b_restricted(OpSym s, int k) const;
  /// Restricted dd^c in B-coordinates, degree k -> k+2.
  Matrix b_ddc(int k) const;
  int c_dim(int k) const;
  const Subspace& c_divisor(int k) const;  // im(ddc + dcd) in Lambda^k
  const Matrix& c_projection(int k) const; // Lambda^k -> C^k coordinates
  const Matrix& c_section(int k) const;    // C^k -> Lambda^k
  /// Descended operator on the quotient complex, degree k -> k+1.
  Matrix c_descended(OpSym s, int k) const;
  Matrix c_ddc(int k) const;               // descended dd^c, k -> k+2

  // --- cohomologies ---
  CohomologySpace bott_chern(int k) const;
  CohomologySpace aeppli(int k) const;
  CohomologySpace de_rham(int k) const;
  CohomologySpace dc_cohomology(int k) const;
  /// J-even / J-odd cohomology: the image of closed even (odd) forms
  /// inside de Rham cohomology.
  CohomologySpace even_cohomology(int k) const;
  CohomologySpace odd_cohomology(int k) const;
  /// delta- or deltabar-cohomology of the complex (B, delta).
  CohomologySpace delta_cohomology(int k, bool bar) const;
  CohomologySpace delta_bott_chern(int k) const;  // H_{delta+deltabar}
  CohomologySpace delta_aeppli(int k) const;      // H_{delta deltabar}

  /// Canonical equality H_{delta+deltabar} = H_{d+dc} and
  /// H_{delta deltabar} = H_{ddc}: same numerator and divisor spaces.
  bool delta_equals_ddc_bott_chern(int k) const;
  bool delta_equals_ddc_aeppli(int k) const;

  struct Splitting {
    CohomologySpace even, odd;
    int bc_dim = 0;
    bool dims_ok = false;  // dim even + dim odd == dim BC
  };
  Splitting bc_splitting(int k) const;

  /// Bigraded Bott-Chern groups: closed (p,q)-forms for the four low
  /// bidegrees (where d-closed = dc-closed, asserted), and the (1,1)
  /// quotient by dd^c of scalars in B.
  CohomologySpace bigraded_low_degree(int p, int q) const;

  /// Module pairing H^k_{d+dc} x H^l_{ddc} -> H^{k+l}_{ddc};
  /// representatives are moved to confirm well-definedness.
  PairingCheck module_pairing_check(const Form& bc_rep, const Form& a_rep,
                                    const Form& b_move, const Form& eta_move,
                                    const Form& theta_move) const;
  /// Aeppli class coordinates of [bc_rep ∧ a_rep].
  Matrix pairing_class(const Form& bc_rep, const Form& a_rep) const;

  DiagramReport diagram_maps(int k) const;

  // --- relations with harmonic spaces (the ctx must share this acs) ---
  /// Image of the P-harmonic space in the matching cohomology is
  /// injective; returns (h, image dim).
  std::pair<int, int> harmonic_injection(const OperatorContext& ctx,
                                         HarmonicOp p, int k) const;

 private:
  struct QData {
    Subspace numerator;  // in ambient coordinates of the hosting complex
    Subspace divisor;
    QuotientSpace quotient;
  };
  QData bc_qdata(int k) const;
  QData aeppli_qdata(int k) const;
  CohomologySpace make_space(const std::string& tag, int k, ComplexTag ct,
                             const QData& q,
                             const Matrix* lift = nullptr) const;

  const AlmostComplex* acs_;
  struct Cache {
    bool b_ready = false, c_ready = false;
    Subspace b;
    Subspace c_div;
    Matrix c_proj, c_sect;
  };
  mutable std::vector<Cache> cache_;
  Cache& cache(int k) const;
  Matrix anticommutator(int k) const;  // (ddc + dcd) : k -> k+2
  Matrix op_matrix(OpSym s, int k) const;
};

}  // namespace acx
