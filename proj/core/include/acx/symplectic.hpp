#pragma once

#include "acx/metric.hpp"

namespace acx {

/// Symplectic (Lefschetz) operators of an invariant 2-form omega:
/// L = omega ∧ ., the dual operator Lam given by contraction with
/// omega, and d^Lam = [d, Lam] = d Lam - Lam d.
class Symplectic {
 public:
  /// Throws ValidationError if omega is degenerate (omega^m = 0).
  Symplectic(const LieAlgebra& g, Form omega);

  const LieAlgebra& algebra() const { return *g_; }
  const Form& omega() const { return omega_; }
  /// omega(e_i, e_j) as a matrix.
  const Matrix& omega_matrix() const { return omega_mat_; }
  bool closed() const { return closed_; }

  /// g(X, Y) = omega(X, JY) as a frame Gram matrix (the compatible
  /// metric of the triple when it is positive definite).
  Matrix compatible_gram(const AlmostComplex& acs) const;
  /// True when (J, g, omega) is a compatible almost Kahler triple:
  /// d omega = 0 and g = omega(., J.).
  bool almost_kahler(const AlmostComplex& acs, const Metric& metric) const;

  const Matrix& l_matrix(int k) const;    // degree k -> k+2
  const Matrix& lam_matrix(int k) const;  // degree k -> k-2, contraction
  const Matrix& dlam_matrix(int k) const; // degree k -> k-1
  Form l(const Form& a) const;
  Form lam(const Form& a) const;
  Form dlam(const Form& a) const;

  /// Lefschetz decomposition a = sum_j L^j P_(k-2j) with every P
  /// primitive (Lam P = 0); returned as (j, P) pairs with P nonzero.
  std::vector<std::pair<int, Form>> primitive_decomposition(
      const Form& a) const;

 private:
  const LieAlgebra* g_;
  Form omega_;
  Matrix omega_mat_, pi_;  // pi = omega_mat^{-1}
  bool closed_ = false;
  mutable std::vector<Matrix> l_, lam_, dlam_;
};

}  // namespace acx
