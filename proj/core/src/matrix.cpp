#include "acx/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace acx {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Scalar& Matrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("Matrix::at out of bounds");
  return a_[static_cast<size_t>(r) * cols_ + c];
}

const Scalar& Matrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("Matrix::at out of bounds");
  return a_[static_cast<size_t>(r) * cols_ + c];
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? Scalar(1) : Scalar(0))) return false;
  return true;
}

bool Matrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : a_)
    if (x.im != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(i, j) = at(i, j).conj();
  return t;
}

Matrix Matrix::conj_transpose() const { return transpose().conj(); }

Matrix Matrix::operator-() const {
  Matrix t(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) t.a_[i] = -a_[i];
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix shape mismatch in +");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix shape mismatch in -");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("Matrix shape mismatch in *");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& x : m.a_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::col(int c) const {
  Matrix v(rows_, 1);
  for (int i = 0; i < rows_; ++i) v.at(i, 0) = at(i, c);
  return v;
}

void Matrix::set_col(int c, const Matrix& v) {
  if (v.rows() != rows_ || v.cols() != 1)
    throw std::invalid_argument("set_col shape mismatch");
  for (int i = 0; i < rows_; ++i) at(i, c) = v.at(i, 0);
}

Matrix Matrix::row(int r) const {
  Matrix v(1, cols_);
  for (int j = 0; j < cols_; ++j) v.at(0, j) = at(r, j);
  return v;
}

Matrix Matrix::hcat(const Matrix& b) const {
  if (rows_ != b.rows_) throw std::invalid_argument("hcat shape mismatch");
  Matrix m(rows_, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < b.cols_; ++j) m.at(i, cols_ + j) = b.at(i, j);
  }
  return m;
}

Matrix Matrix::vcat(const Matrix& b) const {
  if (cols_ != b.cols_) throw std::invalid_argument("vcat shape mismatch");
  Matrix m(rows_ + b.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = b.at(i, j);
  return m;
}

namespace {

// Proxy for how expensive a pivot is: unit pivots first, then small
// operands. Only the relative order matters.
size_t entry_weight(const Scalar& s) {
  if ((s.re == 1 || s.re == -1) && s.im == 0) return 0;
  if (s.re == 0 && (s.im == 1 || s.im == -1)) return 1;
  size_t w = mpz_sizeinbase(s.re.get_num().get_mpz_t(), 2) +
             mpz_sizeinbase(s.re.get_den().get_mpz_t(), 2) +
             mpz_sizeinbase(s.im.get_num().get_mpz_t(), 2) +
             mpz_sizeinbase(s.im.get_den().get_mpz_t(), 2);
  return 2 + w;
}

}  // namespace

Echelon Matrix::reduced_echelon(Pivoting p) const {
  Echelon e;
  e.rref = *this;
  Matrix& m = e.rref;
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int pivot = -1;
    if (p == Pivoting::FirstNonzero) {
      for (int i = lead; i < rows_; ++i)
        if (!m.at(i, c).is_zero()) {
          pivot = i;
          break;
        }
    } else {
      size_t best = 0;
      for (int i = lead; i < rows_; ++i) {
        if (m.at(i, c).is_zero()) continue;
        size_t w = entry_weight(m.at(i, c));
        if (pivot < 0 || w < best) {
          pivot = i;
          best = w;
        }
        if (best == 0) break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    const Scalar inv = m.at(lead, c).inverse();
    for (int j = c; j < cols_; ++j) m.at(lead, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == lead || m.at(i, c).is_zero()) continue;
      const Scalar f = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    e.pivot_cols.push_back(c);
    ++lead;
  }
  e.rank = lead;
  return e;
}

Matrix Matrix::kernel_rows(Pivoting p) const {
  const Echelon e = reduced_echelon(p);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < cols_; ++c) {
      if (pi < e.pivot_cols.size() && e.pivot_cols[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(static_cast<int>(free_cols.size()), cols_);
  for (size_t f = 0; f < free_cols.size(); ++f) {
    k.at(static_cast<int>(f), free_cols[f]) = Scalar(1);
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
      k.at(static_cast<int>(f), e.pivot_cols[r]) =
          -e.rref.at(static_cast<int>(r), free_cols[f]);
  }
  // Canonicalize: echelon-reduce the kernel rows so the basis is the
  // unique one for this subspace.
  return k.reduced_echelon(p).rref;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
  if (rhs.rows() != rows_) throw std::invalid_argument("solve shape mismatch");
  const Echelon e = hcat(rhs).reduced_echelon();
  Matrix x(cols_, rhs.cols());
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
    int pc = e.pivot_cols[r];
    if (pc >= cols_) return std::nullopt;  // inconsistent system
    for (int j = 0; j < rhs.cols(); ++j)
      x.at(pc, j) = e.rref.at(static_cast<int>(r), cols_ + j);
  }
  return x;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square");
  const Echelon e = hcat(identity(rows_)).reduced_echelon();
  if (e.rank < rows_) throw std::domain_error("inverse of singular matrix");
  Matrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = e.rref.at(i, cols_ + j);
  return inv;
}

Scalar Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square");
  Matrix m = *this;
  Scalar d(1);
  for (int c = 0; c < cols_; ++c) {
    int pivot = -1;
    for (int i = c; i < rows_; ++i)
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    const Scalar inv = m.at(c, c).inverse();
    for (int i = c + 1; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      const Scalar f = m.at(i, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

int Matrix::rank() const { return reduced_echelon().rank; }

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "[") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Matrix gram_adjoint(const Matrix& op, const Matrix& gram_src,
                    const Matrix& gram_dst) {
  if (!gram_src.is_hermitian() || !gram_dst.is_hermitian())
    throw std::invalid_argument("gram_adjoint: non-Hermitian Gram matrix");
  if (op.cols() != gram_src.rows() || op.rows() != gram_dst.rows())
    throw std::invalid_argument("gram_adjoint: shape mismatch");
  return gram_src.inverse() * op.conj_transpose() * gram_dst;
}

}  // namespace acx
