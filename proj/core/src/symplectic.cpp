#include "acx/symplectic.hpp"

#include <stdexcept>

namespace acx {

Symplectic::Symplectic(const LieAlgebra& g, Form omega)
    : g_(&g), omega_(std::move(omega)) {
  const int n = g.dim();
  if (omega_.degree() != 2) throw ValidationError("omega must be a 2-form");
  omega_mat_ = Matrix(n, n);
  for (const auto& [w, c] : omega_.coeffs()) {
    const auto idx = word_indices(w);
    omega_mat_.at(idx[0] - 1, idx[1] - 1) = c;
    omega_mat_.at(idx[1] - 1, idx[0] - 1) = -c;
  }
  Form power = Form::unit(n);
  for (int j = 0; j < n / 2; ++j) power = wedge(power, omega_);
  if (power.is_zero())
    throw ValidationError("omega is degenerate: omega^m = 0");
  pi_ = omega_mat_.inverse();
  closed_ = g.d(omega_).is_zero();
  l_.resize(static_cast<size_t>(n) + 1);
  lam_.resize(static_cast<size_t>(n) + 1);
  dlam_.resize(static_cast<size_t>(n) + 1);
}

Matrix Symplectic::compatible_gram(const AlmostComplex& acs) const {
  return omega_mat_ * acs.j_frame();
}

bool Symplectic::almost_kahler(const AlmostComplex& acs,
                               const Metric& metric) const {
  return closed_ && compatible_gram(acs) == metric.gram();
}

const Matrix& Symplectic::l_matrix(int k) const {
  auto& slot = l_[static_cast<size_t>(k)];
  const int n = g_->dim();
  if (slot.rows() == 0 && slot.cols() == 0) {
    const FormBasis& from = g_->basis(k);
    const FormBasis& to = g_->basis(std::min(k + 2, n + 1));
    Matrix m(k + 2 > n ? 0 : to.size(), from.size());
    if (k + 2 <= n)
      for (int c = 0; c < from.size(); ++c)
        m.set_col(c, wedge(omega_, Form::monomial(n, from.word(c), Scalar(1)))
                         .coords(to));
    slot = std::move(m);
  }
  return slot;
}

const Matrix& Symplectic::lam_matrix(int k) const {
  auto& slot = lam_[static_cast<size_t>(k)];
  if (slot.rows() == 0 && slot.cols() == 0) {
    const int n = g_->dim();
    const FormBasis& from = g_->basis(k);
    const FormBasis& to = g_->basis(std::max(k - 2, 0));
    Matrix m(k < 2 ? 0 : to.size(), from.size());
    if (k >= 2) {
      for (int c = 0; c < from.size(); ++c) {
        const Form e = Form::monomial(n, from.word(c), Scalar(1));
        Form acc(n, k - 2);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            const Scalar& pij = pi_.at(i - 1, j - 1);
            if (pij.is_zero()) continue;
            acc += (Scalar(1, 2, 0, 1) * pij) * interior(i, interior(j, e));
          }
        m.set_col(c, acc.coords(to));
      }
    }
    slot = std::move(m);
  }
  return slot;
}

const Matrix& Symplectic::dlam_matrix(int k) const {
  auto& slot = dlam_[static_cast<size_t>(k)];
  if (slot.rows() == 0 && slot.cols() == 0) {
    const int n = g_->dim();
    const int out = g_->basis(std::max(k - 1, 0)).size();
    Matrix m(k < 1 ? 0 : out, g_->basis(k).size());
    if (k >= 1) {
      if (k >= 2) m += g_->d_matrix(k - 2) * lam_matrix(k);
      if (k < n) m -= lam_matrix(k + 1) * g_->d_matrix(k);
    }
    slot = std::move(m);
  }
  return slot;
}

Form Symplectic::l(const Form& a) const {
  return wedge(omega_, a);
}

Form Symplectic::lam(const Form& a) const {
  if (a.degree() < 2) return Form(g_->dim(), 0);
  return Form::from_coords(g_->basis(a.degree() - 2),
                           lam_matrix(a.degree()) *
                               a.coords(g_->basis(a.degree())));
}

Form Symplectic::dlam(const Form& a) const {
  if (a.degree() < 1) return Form(g_->dim(), 0);
  return Form::from_coords(g_->basis(a.degree() - 1),
                           dlam_matrix(a.degree()) *
                               a.coords(g_->basis(a.degree())));
}

std::vector<std::pair<int, Form>> Symplectic::primitive_decomposition(
    const Form& a) const {
  const int n = g_->dim(), m = n / 2, k = a.degree();
  const FormBasis& basis = g_->basis(k);
  // Unknowns: primitive components P_(k-2j); columns L^j B_j where B_j
  // is a kernel basis of Lam in degree k-2j.
  struct Block {
    int j;
    FormBasis const* basis;
    Matrix cols;  // ambient coords of L^j (kernel basis vectors)
    Matrix prim;  // kernel basis (columns), degree k-2j
  };
  std::vector<Block> blocks;
  Matrix sys(basis.size(), 0);
  for (int j = std::max(0, k - m); 2 * j <= k; ++j) {
    const int deg = k - 2 * j;
    const Matrix prim = lam_matrix(deg).kernel_rows().transpose();
    if (prim.cols() == 0) continue;
    Matrix lifted = prim;
    for (int t = 0; t < j; ++t) {
      int d = deg + 2 * t;
      lifted = l_matrix(d) * lifted;
    }
    blocks.push_back(Block{j, &g_->basis(deg), lifted, prim});
    sys = sys.cols() == 0 ? lifted : sys.hcat(lifted);
  }
  const auto sol = sys.solve(a.coords(basis));
  if (!sol) throw std::logic_error("Lefschetz decomposition failed");
  std::vector<std::pair<int, Form>> out;
  int offset = 0;
  for (const auto& b : blocks) {
    Matrix coeff(b.prim.cols(), 1);
    for (int i = 0; i < b.prim.cols(); ++i)
      coeff.at(i, 0) = sol->at(offset + i, 0);
    offset += b.prim.cols();
    const Matrix p = b.prim * coeff;
    Form pf = Form::from_coords(*b.basis, p);
    if (!pf.is_zero()) out.emplace_back(b.j, pf);
  }
  return out;
}

}  // namespace acx
