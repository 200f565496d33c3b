#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "acx/scalar.hpp"

namespace acx {

struct Echelon;

/// Dense matrix over the Gaussian rationals. Every algorithm here is
/// fraction-exact; there is no rounding anywhere in the library.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c);
  const Scalar& at(int r, int c) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_hermitian() const;
  bool is_real() const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix conj_transpose() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix col(int c) const;
  void set_col(int c, const Matrix& v);
  Matrix row(int r) const;
  /// Columns of `b` appended to the right.
  Matrix hcat(const Matrix& b) const;
  /// Rows of `b` appended below.
  Matrix vcat(const Matrix& b) const;

  /// Pivot selection for Gaussian elimination. `FirstNonzero` is the
  /// textbook choice; `Shortest` prefers unit pivots and small entries
  /// to limit fraction growth. Both reach the same reduced echelon
  /// form, which is unique.
  enum class Pivoting { FirstNonzero, Shortest };

  Echelon reduced_echelon(Pivoting p = Pivoting::Shortest) const;

  int rank() const;

  /// Canonical basis of the null space, one basis vector per row,
  /// reduced to echelon form (unique for the subspace).
  Matrix kernel_rows(Pivoting p = Pivoting::Shortest) const;

  /// Particular solution X of (*this) X = rhs, or nullopt if
  /// inconsistent. Free variables are set to zero.
  std::optional<Matrix> solve(const Matrix& rhs) const;

  Matrix inverse() const;
  Scalar det() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

struct Echelon {
  Matrix rref;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Adjoint A of `op` for the Hermitian products given by positive
/// Gram matrices: <op x, y>_dst = <x, A y>_src for all x, y.
/// Throws if a Gram matrix is not Hermitian.
Matrix gram_adjoint(const Matrix& op, const Matrix& gram_src,
                    const Matrix& gram_dst);

}  // namespace acx
