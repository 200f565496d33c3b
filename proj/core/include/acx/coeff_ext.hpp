#pragma once

#include "acx/almost_complex.hpp"

namespace acx {

/// Finite-dimensional module of abstract functions closed under the
/// frame derivations: basis f_1..f_N, matrices D_i for the action of
/// the frame field e_i, and an L2-style Gram matrix. Construction
/// checks the commutation relations [D_i, D_j] = sum_k c^k_ij D_k and
/// skew-adjointness of each D_i (integration by parts on a unimodular
/// quotient).
class FunctionModule {
 public:
  FunctionModule(const LieAlgebra& g, std::vector<std::string> names,
                 std::vector<Matrix> derivations, Matrix gram);

  const LieAlgebra& algebra() const { return *g_; }
  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const Matrix& derivation(int i) const;  // 1-based frame index
  const Matrix& gram() const { return gram_; }

  /// Derivation along the complex frame vector dual to phi^j (or its
  /// conjugate for bar = true), as an N x N matrix.
  Matrix xi(const AlmostComplex& acs, int j, bool bar) const;

 private:
  const LieAlgebra* g_;
  std::vector<std::string> names_;
  std::vector<Matrix> d_;
  Matrix gram_;
};

/// Trigonometric module {1, cos(2 pi n y), sin(2 pi n y)}_{n<=maxfreq}
/// along coordinate direction `direction` (1-based frame index); the
/// 2 pi factors are scaled away so the derivation acts as an integer
/// rotation block and all arithmetic stays rational.
FunctionModule trig_module(const LieAlgebra& g, int maxfreq, int direction);

/// Form with coefficients in a function module.
struct ExtendedForm {
  int degree = 0;
  std::map<Word, Matrix> coeff;  // word -> N x 1 module vector
};

/// f (x) a: every word coefficient of a times the module vector.
ExtendedForm tensor_form(const Form& a, const Matrix& module_vec);

enum class ExtendedOp { D, Dc, DDc, AntiCommutator };

/// The invariant complex with module coefficients and its operators:
/// d(f (x) a) = sum_i (D_i f) (x) e^i ∧ a + f (x) da, with J acting
/// coefficient-linearly and d^c = J^{-1} d J.
class ExtendedComplex {
 public:
  ExtendedComplex(const AlmostComplex& acs, const FunctionModule& mod);

  const AlmostComplex& acs() const { return *acs_; }
  const FunctionModule& module() const { return *mod_; }
  int n() const { return acs_->n(); }
  int dim(int k) const;  // N * C(n, k)

  const Matrix& d_matrix(int k) const;
  const Matrix& dc_matrix(int k) const;
  Matrix ddc_matrix(int k) const;            // degree k -> k+2
  Matrix anticommutator_matrix(int k) const; // dd^c + d^c d

  Matrix coords(const ExtendedForm& a) const;
  ExtendedForm from_coords(int degree, const Matrix& col) const;
  ExtendedForm apply(ExtendedOp op, const ExtendedForm& a) const;

 private:
  const AlmostComplex* acs_;
  const FunctionModule* mod_;
  mutable std::vector<Matrix> dmat_, dcmat_;
};

/// Residuals of the closedness system for an invariant-type 2-form
///   a phi^12 + e phi^{1 -1} + f phi^{1 -2} + g phi^{-1 2}
///     + h phi^{2 -2} + b phi^{-1 -2}
/// with module coefficients on the Kodaira-Thurston structure: eight
/// module vectors, all zero iff the 2-form is d- and d^c-closed.
std::vector<Matrix> system_star_residual(const AlmostComplex& acs,
                                         const FunctionModule& mod,
                                         const Matrix& a, const Matrix& b,
                                         const Matrix& e, const Matrix& f,
                                         const Matrix& g, const Matrix& h);

/// Assemble the 2-form whose coefficients enter system_star_residual.
ExtendedForm system_star_form(const AlmostComplex& acs,
                              const FunctionModule& mod, const Matrix& a,
                              const Matrix& b, const Matrix& e,
                              const Matrix& f, const Matrix& g,
                              const Matrix& h);

/// dim of (ker d ∩ ker d^c in extended degree 2) modulo dd^c of
/// extended scalars killed by dd^c + d^c d, at trig truncation
/// maxfreq. The invariant value sits at maxfreq = 0; the sequence
/// grows strictly with the truncation.
int bc_growth_witness(const AlmostComplex& acs, int maxfreq,
                      int direction = 3);

}  // namespace acx
