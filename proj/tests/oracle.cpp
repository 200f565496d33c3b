#include "oracle.hpp"

namespace acx::oracle {

Matrix naive_rref(const Matrix& m) {
  Matrix a = m;
  const int rows = a.rows(), cols = a.cols();
  int lead = 0;
  for (int c = 0; c < cols && lead < rows; ++c) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r)
      if (!a.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(lead, j));
    const Scalar inv = a.at(lead, c).inverse();
    for (int j = 0; j < cols; ++j) a.at(lead, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Scalar f = a.at(r, c);
      if (f.is_zero()) continue;
      for (int j = 0; j < cols; ++j) a.at(r, j) -= f * a.at(lead, j);
    }
    ++lead;
  }
  return a;
}

int naive_rank(const Matrix& m) {
  const Matrix r = naive_rref(m);
  int rank = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < r.cols(); ++j)
      if (!r.at(i, j).is_zero()) nonzero = true;
    if (nonzero) ++rank;
  }
  return rank;
}

Matrix naive_kernel_rows(const Matrix& m) {
  const Matrix r = naive_rref(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (!r.at(i, j).is_zero()) {
        pivot_col.push_back(j);
        is_pivot[static_cast<size_t>(j)] = true;
        break;
      }
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[static_cast<size_t>(j)]) free_cols.push_back(j);
  Matrix k(static_cast<int>(free_cols.size()), m.cols());
  for (size_t f = 0; f < free_cols.size(); ++f) {
    k.at(static_cast<int>(f), free_cols[f]) = Scalar(1);
    for (size_t r2 = 0; r2 < pivot_col.size(); ++r2)
      k.at(static_cast<int>(f), pivot_col[r2]) =
          -r.at(static_cast<int>(r2), free_cols[f]);
  }
  return naive_rref(k);
}

}  // namespace acx::oracle
