#include "acx/metric.hpp"

#include <stdexcept>

namespace acx {

namespace {

// Gram matrix of the degree-k word basis for the dual metric: the
// entry (I, J) is det of the dual-gram submatrix picked by the words.
Matrix compound_gram(const Matrix& dual_gram, const FormBasis& basis) {
  Matrix g(basis.size(), basis.size());
  for (int a = 0; a < basis.size(); ++a) {
    const auto ia = word_indices(basis.word(a));
    for (int b = 0; b < basis.size(); ++b) {
      const auto ib = word_indices(basis.word(b));
      const int k = static_cast<int>(ia.size());
      if (k == 0) {
        g.at(a, b) = Scalar(1);
        continue;
      }
      Matrix sub(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
          sub.at(r, c) = dual_gram.at(ia[r] - 1, ib[c] - 1);
      g.at(a, b) = sub.det();
    }
  }
  return g;
}

int complement_sign(Word w, int n) {
  const Word full = n == 32 ? ~Word{0} : (Word{1} << n) - 1;
  return wedge_sign(w, full & ~w);
}

}  // namespace

Metric::Metric(const AlmostComplex& acs, Matrix gram)
    : acs_(&acs), gram_(std::move(gram)) {
  const int n = acs.n();
  acs.algebra().require_unimodular();
  if (gram_.rows() != n || gram_.cols() != n)
    throw ValidationError("metric gram has wrong shape");
  if (!gram_.is_real() || !(gram_ == gram_.transpose()))
    throw ValidationError("metric gram must be real symmetric");
  // Positive definiteness: leading principal minors all positive.
  for (int k = 1; k <= n; ++k) {
    Matrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = gram_.at(i, j);
    const Scalar mk = lead.det();
    if (!(mk.is_real() && mk.re > 0))
      throw ValidationError("metric gram is not positive definite");
  }
  if (!(acs.j_frame().transpose() * gram_ * acs.j_frame() == gram_))
    throw ValidationError("metric is not J-compatible: g(J.,J.) != g");
  dual_gram_ = gram_.inverse();
  const Scalar dg = gram_.det();
  if (!rat_sqrt(dg.re, &vol_scale_))
    throw std::logic_error(
        "det of a J-compatible gram must be a rational square");
  cache_.resize(static_cast<size_t>(n) + 1);
  dstar_.resize(static_cast<size_t>(n) + 1);
}

Metric Metric::from_coframe_hermitian(const AlmostComplex& acs,
                                      const Matrix& h) {
  const int m = acs.m(), n = acs.n();
  if (!h.is_hermitian() || h.rows() != m)
    throw ValidationError("coframe Hermitian matrix has wrong shape");
  // Bilinear dual metric in the complex covector basis: (1,0) pairs
  // only with (0,1) and g*(phi^i, conj phi^j) = h_ij.
  Matrix gc(n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      gc.at(i, m + j) = h.at(i, j);
      gc.at(m + j, i) = h.at(i, j);
    }
  const Matrix pfull = acs.coframe().vcat(acs.coframe().conj());
  const Matrix pfull_inv = pfull.inverse();
  const Matrix dual = pfull_inv * gc * pfull_inv.transpose();
  Matrix gram = dual.inverse();
  if (!gram.is_real())
    throw std::logic_error("coframe metric construction produced a "
                           "non-real gram");
  return Metric(acs, std::move(gram));
}

Form Metric::volume_form() const {
  std::vector<int> all;
  for (int i = 1; i <= acs_->n(); ++i) all.push_back(i);
  return Form::monomial(acs_->n(), word_from_indices(all), Scalar(vol_scale_));
}

Metric::Cache& Metric::cache(int k) const {
  auto& c = cache_[static_cast<size_t>(k)];
  if (c.ready) return c;
  const int n = acs_->n();
  const FormBasis& basis = acs_->algebra().basis(k);
  c.hgram = compound_gram(dual_gram_, basis);
  c.hgram_inv = c.hgram.inverse();
  // alpha ∧ *e^I = <alpha, e^I> Vol fixes the star columns.
  const FormBasis& cobasis = acs_->algebra().basis(n - k);
  Matrix star(cobasis.size(), basis.size());
  for (int i = 0; i < basis.size(); ++i)
    for (int j = 0; j < basis.size(); ++j) {
      const Scalar& gij = c.hgram.at(j, i);
      if (gij.is_zero()) continue;
      const Word wj = basis.word(j);
      const int s = complement_sign(wj, n);
      const int row = cobasis.index_of(((n == 32 ? ~Word{0} : (Word{1} << n) - 1)) & ~wj);
      star.at(row, i) += Scalar(vol_scale_) * (s < 0 ? -gij : gij);
    }
  c.star = std::move(star);
  c.ready = true;
  return c;
}

const Matrix& Metric::hermitian_gram(int k) const { return cache(k).hgram; }
const Matrix& Metric::hermitian_gram_inverse(int k) const {
  return cache(k).hgram_inv;
}

Scalar Metric::inner(const Form& a, const Form& b) const {
  if (a.degree() != b.degree()) return Scalar(0);
  const FormBasis& basis = acs_->algebra().basis(a.degree());
  const Matrix v =
      a.coords(basis).transpose() * hermitian_gram(a.degree()) *
      b.coords(basis).conj();
  return v.at(0, 0);
}

const Matrix& Metric::star_matrix(int k) const { return cache(k).star; }

Form Metric::star(const Form& a) const {
  const FormBasis& basis = acs_->algebra().basis(a.degree());
  return Form::from_coords(acs_->algebra().basis(acs_->n() - a.degree()),
                           star_matrix(a.degree()) * a.coords(basis));
}

Matrix Metric::adjoint(const Matrix& op, int src_degree,
                       int dst_degree) const {
  return gram_adjoint(op, hermitian_gram(src_degree),
                      hermitian_gram(dst_degree));
}

const Matrix& Metric::d_adjoint(int k_plus_1) const {
  auto& slot = dstar_[static_cast<size_t>(k_plus_1)];
  if (slot.rows() == 0 && slot.cols() == 0 && k_plus_1 >= 1)
    slot = adjoint(acs_->algebra().d_matrix(k_plus_1 - 1), k_plus_1 - 1,
                   k_plus_1);
  return slot;
}

}  // namespace acx
