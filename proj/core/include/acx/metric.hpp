#pragma once

#include "acx/almost_complex.hpp"

namespace acx {

/// J-compatible Riemannian metric on the invariant complex: a real
/// symmetric positive-definite Gram matrix on the frame, the C-linear
/// Hodge star, the per-degree Hermitian products <a,b> (coefficient of
/// a ∧ conj(*b) on Vol) and Gram adjoints.
///
/// Construction requires a unimodular algebra: only then do invariant
/// Gram adjoints model the L2 adjoints on the quotient.
class Metric {
 public:
  /// Throws ValidationError on: non-unimodular algebra, non-symmetric
  /// or non-positive gram, gram not J-compatible (g(J.,J.) != g).
  Metric(const AlmostComplex& acs, Matrix gram);

  static Metric frame_identity(const AlmostComplex& acs) {
    return Metric(acs, Matrix::identity(acs.n()));
  }
  /// Metric with prescribed Hermitian products h_ij = <phi^i, phi^j>
  /// on the (1,0)-coframe; h must be Hermitian positive-definite.
  static Metric from_coframe_hermitian(const AlmostComplex& acs,
                                       const Matrix& h);

  const AlmostComplex& acs() const { return *acs_; }
  const LieAlgebra& algebra() const { return acs_->algebra(); }
  const Matrix& gram() const { return gram_; }
  /// sqrt(det gram): rational for J-compatible metrics.
  const Rat& volume_scale() const { return vol_scale_; }
  Form volume_form() const;

  /// Hermitian Gram matrix of the degree-k word basis.
  const Matrix& hermitian_gram(int k) const;
  const Matrix& hermitian_gram_inverse(int k) const;
  Scalar inner(const Form& a, const Form& b) const;

  /// Hodge star as a matrix, degree k -> 2m-k.
  const Matrix& star_matrix(int k) const;
  Form star(const Form& a) const;

  /// Adjoint of op : degree src -> degree dst with respect to the
  /// Hermitian products; result maps degree dst -> src.
  Matrix adjoint(const Matrix& op, int src_degree, int dst_degree) const;
  /// Adjoint of d at each degree (d* : degree k+1 -> k).
  const Matrix& d_adjoint(int k_plus_1) const;

 private:
  const AlmostComplex* acs_;
  Matrix gram_;      // frame Gram
  Matrix dual_gram_; // inverse: metric on covectors
  Rat vol_scale_;

  struct Cache {
    bool ready = false;
    Matrix hgram, hgram_inv, star;
  };
  mutable std::vector<Cache> cache_;
  mutable std::vector<Matrix> dstar_;
  Cache& cache(int k) const;
};

}  // namespace acx
