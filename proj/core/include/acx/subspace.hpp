#pragma once

#include "acx/matrix.hpp"

namespace acx {

/// Linear subspace of coordinate space Scalar^ambient, stored as the
/// unique reduced-echelon basis (rows). Equality of subspaces is
/// therefore syntactic equality of the stored bases.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient);
  /// Span of the rows of m (need not be independent).
  static Subspace span_rows(const Matrix& m);
  /// Span of the columns of m.
  static Subspace span_cols(const Matrix& m) {
    return span_rows(m.transpose());
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  /// dim × ambient, canonical echelon rows.
  const Matrix& basis() const { return basis_; }
  /// ambient × dim, basis vectors as columns.
  Matrix basis_cols() const { return basis_.transpose(); }

  bool contains(const Matrix& col_vector) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Image under a linear map (matrix acts on column coordinates).
  Subspace apply(const Matrix& op) const;
  /// Coordinates of v in this basis, or nullopt if v is outside.
  std::optional<Matrix> coordinates(const Matrix& col_vector) const;

 private:
  int ambient_;
  Matrix basis_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);

/// total / sub with canonical coset representatives: sub's basis is
/// completed to a basis of total by greedily keeping independent rows
/// of total's canonical basis.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  /// Throws std::invalid_argument unless sub is contained in total.
  QuotientSpace(Subspace total, Subspace sub);

  int dim() const { return reps_.rows(); }
  const Subspace& total() const { return total_; }
  const Subspace& sub() const { return sub_; }
  /// dim × ambient rows, coset representatives.
  const Matrix& representatives() const { return reps_; }

  /// Coordinates of the class of v (a column vector in total) with
  /// respect to the representatives. Throws if v is not in total.
  Matrix class_coords(const Matrix& col_vector) const;

 private:
  Subspace total_, sub_;
  Matrix reps_;
  Matrix lift_;  // columns: [sub basis | reps] for coordinate solves
};

/// Dimension of
/// total/sub together with the representative completion.
QuotientSpace quotient(const Subspace& total, const Subspace& sub);

}  // namespace acx
