#include "acx/coeff_ext.hpp"

#include <stdexcept>

namespace acx {

FunctionModule::FunctionModule(const LieAlgebra& g,
                               std::vector<std::string> names,
                               std::vector<Matrix> derivations, Matrix gram)
    : g_(&g),
      names_(std::move(names)),
      d_(std::move(derivations)),
      gram_(std::move(gram)) {
  const int n = g.dim();
  const int N = dim();
  if (d_.size() != static_cast<size_t>(n))
    throw std::invalid_argument("one derivation per frame direction needed");
  for (const auto& m : d_)
    if (m.rows() != N || m.cols() != N || !m.is_real())
      throw std::invalid_argument("derivation matrices must be real N x N");
  if (gram_.rows() != N || !gram_.is_hermitian())
    throw ValidationError("function Gram must be Hermitian");
  // Commutation with the structure constants.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Matrix want(N, N);
      for (int k = 1; k <= n; ++k) {
        const Rat c = g.structure_constant(k, i, j);
        if (c != 0) want += Scalar(c) * d_[static_cast<size_t>(k - 1)];
      }
      const Matrix have = d_[static_cast<size_t>(i - 1)] * d_[static_cast<size_t>(j - 1)] -
                          d_[static_cast<size_t>(j - 1)] * d_[static_cast<size_t>(i - 1)];
      if (!(have == want))
        throw ValidationError(
            "module derivations do not satisfy the bracket relations");
    }
  // Skew-adjointness: <D f, h> = -<f, D h>.
  for (const auto& m : d_)
    if (!(m.transpose() * gram_ == -(gram_ * m)))
      throw ValidationError("module derivation is not skew-adjoint");
}

const Matrix& FunctionModule::derivation(int i) const {
  return d_.at(static_cast<size_t>(i - 1));
}

Matrix FunctionModule::xi(const AlmostComplex& acs, int j, bool bar) const {
  const int n = g_->dim();
  const Matrix pfull = acs.coframe().vcat(acs.coframe().conj());
  const Matrix u = pfull.inverse();  // column j: dual frame vector of phi^j
  Matrix out(dim(), dim());
  const int col = bar ? acs.m() + j - 1 : j - 1;
  for (int i = 0; i < n; ++i) {
    const Scalar& c = u.at(i, col);
    if (!c.is_zero()) out += c * d_[static_cast<size_t>(i)];
  }
  return out;
}

FunctionModule trig_module(const LieAlgebra& g, int maxfreq, int direction) {
  if (maxfreq < 0) throw std::invalid_argument("negative frequency cap");
  const int N = 2 * maxfreq + 1;
  std::vector<std::string> names = {"1"};
  for (int f = 1; f <= maxfreq; ++f) {
    names.push_back("cos" + std::to_string(f));
    names.push_back("sin" + std::to_string(f));
  }
  std::vector<Matrix> ds(static_cast<size_t>(g.dim()), Matrix(N, N));
  Matrix& d = ds.at(static_cast<size_t>(direction - 1));
  for (int f = 1; f <= maxfreq; ++f) {
    d.at(2 * f, 2 * f - 1) = Scalar(-f);  // cos -> -f sin
    d.at(2 * f - 1, 2 * f) = Scalar(f);   // sin -> f cos
  }
  Matrix gram(N, N);
  gram.at(0, 0) = Scalar(1);
  for (int i = 1; i < N; ++i) gram.at(i, i) = Scalar(1, 2, 0, 1);
  return FunctionModule(g, std::move(names), std::move(ds), std::move(gram));
}

ExtendedForm tensor_form(const Form& a, const Matrix& module_vec) {
  ExtendedForm out;
  out.degree = a.degree();
  for (const auto& [w, c] : a.coeffs()) out.coeff[w] = c * module_vec;
  return out;
}

ExtendedComplex::ExtendedComplex(const AlmostComplex& acs,
                                 const FunctionModule& mod)
    : acs_(&acs), mod_(&mod) {
  dmat_.resize(static_cast<size_t>(n()) + 1);
  dcmat_.resize(static_cast<size_t>(n()) + 1);
}

int ExtendedComplex::dim(int k) const {
  if (k < 0 || k > n()) return 0;
  return mod_->dim() * acs_->algebra().basis(k).size();
}

const Matrix& ExtendedComplex::d_matrix(int k) const {
  auto& slot = dmat_[static_cast<size_t>(k)];
  if (slot.rows() != 0 || slot.cols() != 0) return slot;
  const int N = mod_->dim(), nn = n();
  const FormBasis& from = acs_->algebra().basis(k);
  const FormBasis& to = acs_->algebra().basis(k + 1);
  Matrix m(dim(k + 1), dim(k));
  for (int wcol = 0; wcol < from.size(); ++wcol) {
    const Word w = from.word(wcol);
    // f (x) d(e^w) part.
    const Matrix dcol = acs_->algebra().d_matrix(k).col(wcol);
    for (int wrow = 0; wrow < to.size(); ++wrow) {
      const Scalar& c = dcol.at(wrow, 0);
      if (c.is_zero()) continue;
      for (int fi = 0; fi < N; ++fi)
        m.at(wrow * N + fi, wcol * N + fi) += c;
    }
    // (D_i f) (x) e^i ∧ e^w part.
    for (int i = 1; i <= nn; ++i) {
      const int s = wedge_sign(Word{1} << (i - 1), w);
      if (s == 0) continue;
      const int wrow = to.index_of(w | (Word{1} << (i - 1)));
      const Matrix& di = mod_->derivation(i);
      for (int fr = 0; fr < N; ++fr)
        for (int fc = 0; fc < N; ++fc) {
          const Scalar& c = di.at(fr, fc);
          if (c.is_zero()) continue;
          m.at(wrow * N + fr, wcol * N + fc) += s < 0 ? -c : c;
        }
    }
  }
  slot = std::move(m);
  return slot;
}

const Matrix& ExtendedComplex::dc_matrix(int k) const {
  auto& slot = dcmat_[static_cast<size_t>(k)];
  if (slot.rows() != 0 || slot.cols() != 0) return slot;
  const int N = mod_->dim();
  auto blowup = [&](const Matrix& a) {
    Matrix big(a.rows() * N, a.cols() * N);
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c) {
        const Scalar& v = a.at(r, c);
        if (v.is_zero()) continue;
        for (int fi = 0; fi < N; ++fi) big.at(r * N + fi, c * N + fi) = v;
      }
    return big;
  };
  if (k == n()) {
    slot = Matrix(0, dim(k));
  } else {
    slot = blowup(acs_->j_matrix_inverse(k + 1)) * d_matrix(k) *
           blowup(acs_->j_matrix(k));
  }
  return slot;
}

Matrix ExtendedComplex::ddc_matrix(int k) const {
  if (k + 2 > n()) return Matrix(0, dim(k));
  return d_matrix(k + 1) * dc_matrix(k);
}

Matrix ExtendedComplex::anticommutator_matrix(int k) const {
  if (k + 2 > n()) return Matrix(0, dim(k));
  return d_matrix(k + 1) * dc_matrix(k) + dc_matrix(k + 1) * d_matrix(k);
}

Matrix ExtendedComplex::coords(const ExtendedForm& a) const {
  const int N = mod_->dim();
  const FormBasis& basis = acs_->algebra().basis(a.degree);
  Matrix v(dim(a.degree), 1);
  for (const auto& [w, vec] : a.coeff) {
    const int wi = basis.index_of(w);
    if (wi < 0) throw std::invalid_argument("word outside the basis");
    for (int fi = 0; fi < N; ++fi) v.at(wi * N + fi, 0) += vec.at(fi, 0);
  }
  return v;
}

ExtendedForm ExtendedComplex::from_coords(int degree, const Matrix& col) const {
  const int N = mod_->dim();
  const FormBasis& basis = acs_->algebra().basis(degree);
  ExtendedForm out;
  out.degree = degree;
  for (int wi = 0; wi < basis.size(); ++wi) {
    Matrix vec(N, 1);
    bool nonzero = false;
    for (int fi = 0; fi < N; ++fi) {
      vec.at(fi, 0) = col.at(wi * N + fi, 0);
      nonzero = nonzero || !vec.at(fi, 0).is_zero();
    }
    if (nonzero) out.coeff[basis.word(wi)] = vec;
  }
  return out;
}

ExtendedForm ExtendedComplex::apply(ExtendedOp op, const ExtendedForm& a) const {
  const int k = a.degree;
  Matrix m;
  int target = k;
  switch (op) {
    case ExtendedOp::D: m = d_matrix(k); target = k + 1; break;
    case ExtendedOp::Dc: m = dc_matrix(k); target = k + 1; break;
    case ExtendedOp::DDc: m = ddc_matrix(k); target = k + 2; break;
    case ExtendedOp::AntiCommutator:
      m = anticommutator_matrix(k);
      target = k + 2;
      break;
  }
  if (target > n()) return ExtendedForm{std::min(target, n()), {}};
  return from_coords(target, m * coords(a));
}

ExtendedForm system_star_form(const AlmostComplex& acs,
                              const FunctionModule&, const Matrix& a,
                              const Matrix& b, const Matrix& e,
                              const Matrix& f, const Matrix& g,
                              const Matrix& h) {
  ExtendedForm out;
  out.degree = 2;
  const auto add = [&](const std::vector<int>& letters, const Matrix& vec) {
    const Form base = acs.phi_word(letters);
    for (const auto& [w, c] : base.coeffs()) {
      auto it = out.coeff.find(w);
      if (it == out.coeff.end())
        out.coeff[w] = c * vec;
      else
        it->second += c * vec;
    }
  };
  add({1, 2}, a);
  add({1, -1}, e);
  add({1, -2}, f);
  add({-1, 2}, g);
  add({2, -2}, h);
  add({-1, -2}, b);
  for (auto it = out.coeff.begin(); it != out.coeff.end();)
    it = it->second.is_zero() ? out.coeff.erase(it) : std::next(it);
  return out;
}

std::vector<Matrix> system_star_residual(const AlmostComplex& acs,
                                         const FunctionModule& mod,
                                         const Matrix& a, const Matrix& b,
                                         const Matrix& e, const Matrix& f,
                                         const Matrix& g, const Matrix& h) {
  const Matrix x1 = mod.xi(acs, 1, false), x1b = mod.xi(acs, 1, true);
  const Matrix x2 = mod.xi(acs, 2, false), x2b = mod.xi(acs, 2, true);
  const Scalar quarter(1, 4, 0, 1);
  std::vector<Matrix> r;
  r.push_back(x2b * a);
  r.push_back(x2 * b);
  r.push_back(quarter * (a - b) + x1b * a);
  r.push_back(-(quarter * (a - b)) + x1 * b);
  r.push_back(x1 * h - x2 * f);
  r.push_back(x1b * h + x2b * g);
  r.push_back(quarter * (g - f) - x2 * e - x1 * g);
  r.push_back(-(quarter * (g - f)) + x2b * e - x1b * f);
  return r;
}

int bc_growth_witness(const AlmostComplex& acs, int maxfreq, int direction) {
  const FunctionModule mod = trig_module(acs.algebra(), maxfreq, direction);
  const ExtendedComplex ext(acs, mod);
  const Subspace closed =
      kernel_basis(ext.d_matrix(2)).intersect(kernel_basis(ext.dc_matrix(2)));
  const Subspace scalars = kernel_basis(ext.anticommutator_matrix(0));
  const Subspace divisor =
      scalars.dim() ? image_basis(ext.ddc_matrix(0) * scalars.basis_cols())
                    : Subspace::zero(ext.dim(2));
  return quotient(closed, divisor).dim();
}

}  // namespace acx
