#include "acx/subspace.hpp"

#include <stdexcept>

namespace acx {

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span_rows(const Matrix& m) {
  Subspace s(m.cols());
  const auto e = m.reduced_echelon();
  Matrix b(e.rank, m.cols());
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < m.cols(); ++j) b.at(i, j) = e.rref.at(i, j);
  s.basis_ = b;
  return s;
}

bool Subspace::contains(const Matrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1)
    throw std::invalid_argument("Subspace::contains expects a column vector");
  return basis_cols().solve(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace ambient mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i).transpose())) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace ambient mismatch");
  return span_rows(basis_.vcat(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return zero(ambient_);
  // x in the intersection iff x = A^T u = B^T v; the (u, v) pairs form
  // the kernel of [A^T | -B^T].
  const Matrix at = basis_.transpose();
  const Matrix bt = other.basis_.transpose();
  const Matrix stacked = at.hcat(-bt);
  const Matrix null_rows = stacked.kernel_rows();
  Matrix vecs(null_rows.rows(), ambient_);
  for (int r = 0; r < null_rows.rows(); ++r) {
    Matrix u(dim(), 1);
    for (int i = 0; i < dim(); ++i) u.at(i, 0) = null_rows.at(r, i);
    const Matrix x = at * u;
    for (int j = 0; j < ambient_; ++j) vecs.at(r, j) = x.at(j, 0);
  }
  return span_rows(vecs);
}

Subspace Subspace::apply(const Matrix& op) const {
  if (op.cols() != ambient_)
    throw std::invalid_argument("Subspace::apply shape mismatch");
  return span_cols(op * basis_cols());
}

std::optional<Matrix> Subspace::coordinates(const Matrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1)
    throw std::invalid_argument("Subspace::coordinates expects a column");
  return basis_cols().solve(v);
}

Subspace kernel_basis(const Matrix& m) {
  Subspace s(m.cols());
  return Subspace::span_rows(m.kernel_rows());
}

Subspace image_basis(const Matrix& m) { return Subspace::span_cols(m); }

QuotientSpace::QuotientSpace(Subspace total, Subspace sub)
    : total_(std::move(total)), sub_(std::move(sub)) {
  if (sub_.ambient_dim() != total_.ambient_dim())
    throw std::invalid_argument("quotient: ambient mismatch");
  if (!total_.contains(sub_))
    throw std::invalid_argument("quotient: sub not contained in total");
  const int ambient = total_.ambient_dim();
  Matrix reps(total_.dim() - sub_.dim(), ambient);
  Subspace acc = sub_;
  int next = 0;
  for (int i = 0; i < total_.dim(); ++i) {
    const Matrix cand = total_.basis().row(i);
    if (acc.contains(cand.transpose())) continue;
    for (int j = 0; j < ambient; ++j) reps.at(next, j) = cand.at(0, j);
    acc = acc.sum(Subspace::span_rows(cand));
    ++next;
  }
  if (next != reps.rows())
    throw std::logic_error("quotient: completion failed");
  reps_ = reps;
  lift_ = sub_.basis_cols().hcat(reps_.transpose());
}

Matrix QuotientSpace::class_coords(const Matrix& v) const {
  if (dim() == 0) return Matrix(0, 1);
  const auto sol = lift_.solve(v);
  if (!sol) throw std::invalid_argument("class_coords: vector not in total");
  Matrix c(dim(), 1);
  for (int i = 0; i < dim(); ++i) c.at(i, 0) = sol->at(sub_.dim() + i, 0);
  return c;
}

QuotientSpace quotient(const Subspace& total, const Subspace& sub) {
  return QuotientSpace(total, sub);
}

}  // namespace acx
