#include "acx/lie_algebra.hpp"

#include <stdexcept>

namespace acx {

LieAlgebra::LieAlgebra(int dim, std::vector<std::vector<std::vector<Rat>>> c)
    : dim_(dim), c_(std::move(c)) {
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("LieAlgebra dimension must be even, >= 2");
  if (c_.size() != static_cast<size_t>(dim))
    throw std::invalid_argument("structure constant table has wrong shape");
  for (const auto& plane : c_) {
    if (plane.size() != static_cast<size_t>(dim))
      throw std::invalid_argument("structure constant table has wrong shape");
    for (const auto& row : plane)
      if (row.size() != static_cast<size_t>(dim))
        throw std::invalid_argument("structure constant table has wrong shape");
  }
  build();
}

LieAlgebra LieAlgebra::abelian(int dim) {
  std::vector c(dim, std::vector(dim, std::vector<Rat>(dim, Rat(0))));
  return LieAlgebra(dim, std::move(c));
}

LieAlgebra LieAlgebra::from_coframe_differentials(std::vector<Form> dcoframe) {
  const int n = static_cast<int>(dcoframe.size());
  std::vector c(n, std::vector(n, std::vector<Rat>(n, Rat(0))));
  for (int k = 0; k < n; ++k) {
    if (dcoframe[k].degree() != 2 && !dcoframe[k].is_zero())
      throw std::invalid_argument("coframe differential must have degree 2");
    for (const auto& [w, coeff] : dcoframe[k].coeffs()) {
      if (!coeff.is_real())
        throw std::invalid_argument("structure constants must be real");
      const auto idx = word_indices(w);
      // d e^k = -sum c^k_ij e^ij
      c[k][idx[0] - 1][idx[1] - 1] = -coeff.re;
    }
  }
  return LieAlgebra(n, std::move(c));
}

void LieAlgebra::build() {
  // Antisymmetrize and stash the coframe differentials.
  dcoframe_.clear();
  for (int k = 0; k < dim_; ++k) {
    Form d(dim_, 2);
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j) {
        const Rat& v = c_[k][i][j];
        if (v != 0)
          d += Scalar(-v) *
               Form::monomial(dim_, word_from_indices({i + 1, j + 1}),
                              Scalar(1));
      }
    dcoframe_.push_back(d);
  }
  bases_.clear();
  for (int k = 0; k <= dim_ + 1; ++k) bases_.emplace_back(dim_, k);
  dmat_.clear();
  for (int k = 0; k <= dim_; ++k) {
    const FormBasis& from = bases_[k];
    const FormBasis& to = bases_[k + 1];
    Matrix m(to.size(), from.size());
    for (int col = 0; col < from.size(); ++col) {
      const auto idx = word_indices(from.word(col));
      Form img(dim_, k + 1);
      for (size_t a = 0; a < idx.size(); ++a) {
        Form part = Form::unit(dim_);
        for (size_t b = 0; b < idx.size(); ++b)
          part = wedge(part, b == a ? dcoframe_[idx[b] - 1]
                                    : Form::covector(dim_, idx[b]));
        img += (a % 2 ? Scalar(-1) : Scalar(1)) * part;
      }
      m.set_col(col, img.coords(to));
    }
    dmat_.push_back(m);
  }
}

Rat LieAlgebra::structure_constant(int k, int i, int j) const {
  if (i == j) return Rat(0);
  if (i < j) return c_[k - 1][i - 1][j - 1];
  return -c_[k - 1][j - 1][i - 1];
}

Matrix LieAlgebra::bracket(int i, int j) const {
  Matrix v(dim_, 1);
  for (int k = 1; k <= dim_; ++k) v.at(k - 1, 0) = structure_constant(k, i, j);
  return v;
}

std::optional<std::array<int, 3>> LieAlgebra::jacobi_witness() const {
  for (int i = 1; i <= dim_; ++i)
    for (int j = i + 1; j <= dim_; ++j)
      for (int k = j + 1; k <= dim_; ++k) {
        Matrix acc(dim_, 1);
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        const std::array<std::array<int, 3>, 3> cyc = {
            {{i, j, k}, {j, k, i}, {k, i, j}}};
        for (const auto& [a, b, c] : cyc) {
          const Matrix inner = bracket(a, b);
          for (int l = 1; l <= dim_; ++l) {
            const Scalar& w = inner.at(l - 1, 0);
            if (w.is_zero()) continue;
            Matrix outer = bracket(l, c);
            for (int r = 0; r < dim_; ++r) acc.at(r, 0) += w * outer.at(r, 0);
          }
        }
        if (!acc.is_zero()) return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

bool LieAlgebra::unimodular() const {
  for (int i = 1; i <= dim_; ++i) {
    Rat tr(0);
    for (int k = 1; k <= dim_; ++k) tr += structure_constant(k, i, k);
    if (tr != 0) return false;
  }
  return true;
}

void LieAlgebra::require_unimodular() const {
  if (!unimodular())
    throw ValidationError(
        "algebra is not unimodular: invariant adjoints are undefined");
}

const FormBasis& LieAlgebra::basis(int k) const {
  if (k < 0 || k > dim_ + 1)
    throw std::out_of_range("form degree out of range");
  return bases_[static_cast<size_t>(k)];
}

const Form& LieAlgebra::coframe_differential(int k) const {
  return dcoframe_.at(static_cast<size_t>(k - 1));
}

const Matrix& LieAlgebra::d_matrix(int k) const {
  if (k < 0 || k > dim_) throw std::out_of_range("d_matrix degree");
  return dmat_[static_cast<size_t>(k)];
}

Form LieAlgebra::d(const Form& alpha) const {
  if (alpha.degree() >= dim_) return Form(dim_, 0);
  const Matrix img = d_matrix(alpha.degree()) * alpha.coords(basis(alpha.degree()));
  return Form::from_coords(basis(alpha.degree() + 1), img);
}

std::vector<int> LieAlgebra::betti() const {
  std::vector<int> b;
  for (int k = 0; k <= dim_; ++k) {
    const int kerdim = basis(k).size() - d_matrix(k).rank();
    const int imdim = k == 0 ? 0 : d_matrix(k - 1).rank();
    b.push_back(kerdim - imdim);
  }
  return b;
}

}  // namespace acx
