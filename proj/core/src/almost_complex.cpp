#include "acx/almost_complex.hpp"

#include <sstream>
#include <stdexcept>

namespace acx {

AlmostComplex::AlmostComplex(const LieAlgebra& g, Matrix j_frame)
    : g_(&g), j_frame_(std::move(j_frame)) {
  const int n = g.dim();
  if (j_frame_.rows() != n || j_frame_.cols() != n)
    throw ValidationError("J frame matrix has wrong shape");
  if (!j_frame_.is_real())
    throw ValidationError("J frame matrix must be real");
  if (!(j_frame_ * j_frame_ == -Matrix::identity(n)))
    throw ValidationError("J^2 != -Id");
  build_coframe();
  tables_.resize(static_cast<size_t>(n) + 1);
}

void AlmostComplex::build_coframe() {
  const int n = g_->dim();
  // (1,0)-covectors annihilate the frame vectors v + i J v; those span
  // the columns of I + iJ, so the coframe is ker (I + iJ)^T.
  Matrix w = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.at(i, j) += Scalar::i() * j_frame_.at(i, j);
  coframe_ = w.transpose().kernel_rows();
  if (coframe_.rows() != n / 2)
    throw ValidationError("coframe computation failed");
  pfull_ = coframe_.vcat(coframe_.conj());
  if (pfull_.rank() != n)
    throw ValidationError("coframe plus conjugates do not span the dual");
}

AlmostComplex AlmostComplex::from_coframe(const LieAlgebra& g,
                                          Matrix coframe_rows) {
  const int n = g.dim();
  if (coframe_rows.rows() != n / 2 || coframe_rows.cols() != n)
    throw ValidationError("coframe has wrong shape");
  Matrix pfull = coframe_rows.vcat(coframe_rows.conj());
  if (pfull.rank() != n)
    throw ValidationError(
        "degenerate coframe: rows plus conjugates do not span the dual "
        "(the span contains a real covector)");
  // The covector action sends phi -> i phi and conj phi -> -i conj phi,
  // i.e. J_frame^T = pfull^T diag (pfull^T)^{-1}; transposing gives the
  // frame matrix below.
  Matrix diag(n, n);
  for (int i = 0; i < n; ++i)
    diag.at(i, i) = i < n / 2 ? Scalar::i() : -Scalar::i();
  Matrix j_frame = pfull.inverse() * diag * pfull;
  if (!j_frame.is_real())
    throw ValidationError("coframe does not define a real structure");
  AlmostComplex acs(g, std::move(j_frame));
  // Keep the caller's coframe (an equivalent basis of the same span).
  acs.coframe_ = coframe_rows;
  acs.pfull_ = std::move(pfull);
  return acs;
}

AlmostComplex::Tables& AlmostComplex::tables(int k) const {
  auto& t = tables_[static_cast<size_t>(k)];
  if (t.ready) return t;
  const int n = g_->dim();
  const FormBasis& basis = g_->basis(k);
  // phi-word basis change: the algebra-map extension of the covector
  // basis change. Column l of pfull_^T holds the e-coords of the l-th
  // complex basis covector.
  t.phi = algebra_map_matrix(pfull_.transpose(), basis, basis);
  t.phi_inv = t.phi.inverse();

  const int mm = n / 2;
  for (int p = 0; p <= std::min(k, mm); ++p) {
    const int q = k - p;
    if (q > mm) continue;
    Matrix sel(basis.size(), basis.size());
    for (int i = 0; i < basis.size(); ++i) {
      int pp = 0;
      for (int idx : word_indices(basis.word(i)))
        if (idx <= mm) ++pp;
      if (pp == p) sel.at(i, i) = Scalar(1);
    }
    t.proj[{p, q}] = t.phi * sel * t.phi_inv;
  }

  // J on k-forms is the algebra-map extension of the covector action
  // alpha -> alpha o J, i.e. of J_frame^T.
  t.j = algebra_map_matrix(j_frame_.transpose(), basis, basis);
  t.j_inv = k % 2 ? -t.j : t.j;  // J^2 = (-1)^k on k-forms

  t.even = Matrix(basis.size(), basis.size());
  t.odd = Matrix(basis.size(), basis.size());
  for (const auto& [pq, proj] : t.proj) {
    if (pq.first % 2 == 0)
      t.even += proj;
    else
      t.odd += proj;
  }
  t.ready = true;
  return t;
}

const Matrix& AlmostComplex::phi_matrix(int k) const { return tables(k).phi; }
const Matrix& AlmostComplex::phi_matrix_inverse(int k) const {
  return tables(k).phi_inv;
}

const Matrix& AlmostComplex::projector(int k, int p, int q) const {
  auto& t = tables(k);
  static const Matrix empty;
  const auto it = t.proj.find({p, q});
  if (it != t.proj.end()) return it->second;
  auto& slot = t.proj[{p, q}];
  slot = Matrix(g_->basis(k).size(), g_->basis(k).size());
  return slot;
}

Form AlmostComplex::bigrade_project(int p, int q, const Form& a) const {
  if (p + q != a.degree()) return Form(n(), a.degree());
  const FormBasis& basis = g_->basis(a.degree());
  return Form::from_coords(basis, projector(a.degree(), p, q) * a.coords(basis));
}

const Matrix& AlmostComplex::j_matrix(int k) const { return tables(k).j; }
const Matrix& AlmostComplex::j_matrix_inverse(int k) const {
  return tables(k).j_inv;
}

Form AlmostComplex::j_apply(const Form& a) const {
  const FormBasis& basis = g_->basis(a.degree());
  return Form::from_coords(basis, j_matrix(a.degree()) * a.coords(basis));
}

const Matrix& AlmostComplex::dc_matrix(int k) const {
  auto& t = tables(k);
  if (t.dc.rows() == 0 && t.dc.cols() == 0) {
    const Matrix& d = g_->d_matrix(k);
    // At top degree d is the 0 x 1 matrix and J is trivial upstairs.
    t.dc = k == n() ? d : j_matrix_inverse(k + 1) * d * j_matrix(k);
  }
  return t.dc;
}

Form AlmostComplex::dc(const Form& a) const {
  if (a.degree() >= n()) return Form(n(), 0);
  const FormBasis& basis = g_->basis(a.degree());
  return Form::from_coords(g_->basis(a.degree() + 1),
                           dc_matrix(a.degree()) * a.coords(basis));
}

const Matrix& AlmostComplex::component_matrix(Bidegree tag, int k) const {
  auto& t = tables(k);
  const auto it = t.comp.find(tag);
  if (it != t.comp.end()) return it->second;
  int dp = 0, dq = 0;
  switch (tag) {
    case Bidegree::Mu: dp = 2; dq = -1; break;
    case Bidegree::Partial: dp = 1; dq = 0; break;
    case Bidegree::PartialBar: dp = 0; dq = 1; break;
    case Bidegree::MuBar: dp = -1; dq = 2; break;
  }
  const int mm = m();
  const Matrix& d = g_->d_matrix(k);
  Matrix acc(g_->basis(k + 1).size(), g_->basis(k).size());
  for (int p = 0; p <= std::min(k, mm); ++p) {
    const int q = k - p;
    if (q > mm) continue;
    const int tp = p + dp, tq = q + dq;
    if (tp < 0 || tq < 0 || tp > mm || tq > mm) continue;
    acc += projector(k + 1, tp, tq) * d * projector(k, p, q);
  }
  t.comp[tag] = acc;
  return t.comp.at(tag);
}

Form AlmostComplex::component(Bidegree tag, const Form& a) const {
  if (a.degree() >= n()) return Form(n(), 0);
  return Form::from_coords(
      g_->basis(a.degree() + 1),
      component_matrix(tag, a.degree()) * a.coords(g_->basis(a.degree())));
}

const Matrix& AlmostComplex::delta_matrix(int k) const {
  auto& t = tables(k);
  if (t.delta.rows() == 0 && t.delta.cols() == 0) {
    const Scalar half(1, 2, 0, 1), ihalf(0, 1, 1, 2);
    t.delta = half * g_->d_matrix(k) + ihalf * dc_matrix(k);
    t.deltabar = half * g_->d_matrix(k) - ihalf * dc_matrix(k);
  }
  return t.delta;
}

const Matrix& AlmostComplex::deltabar_matrix(int k) const {
  delta_matrix(k);
  return tables(k).deltabar;
}

const Matrix& AlmostComplex::parity_matrix(int k, Parity which) const {
  auto& t = tables(k);
  return which == Parity::Even ? t.even : t.odd;
}

Form AlmostComplex::parity_project(Parity which, const Form& a) const {
  const FormBasis& basis = g_->basis(a.degree());
  return Form::from_coords(basis,
                           parity_matrix(a.degree(), which) * a.coords(basis));
}

Matrix AlmostComplex::nijenhuis(int i, int j) const {
  const int nn = n();
  Matrix ei(nn, 1), ej(nn, 1);
  ei.at(i - 1, 0) = Scalar(1);
  ej.at(j - 1, 0) = Scalar(1);
  const Matrix ji = j_frame_ * ei, jj = j_frame_ * ej;
  auto brk = [&](const Matrix& x, const Matrix& y) {
    Matrix acc(nn, 1);
    for (int a = 1; a <= nn; ++a) {
      if (x.at(a - 1, 0).is_zero()) continue;
      for (int b = 1; b <= nn; ++b) {
        if (y.at(b - 1, 0).is_zero()) continue;
        const Matrix v = g_->bracket(a, b);
        for (int r = 0; r < nn; ++r)
          acc.at(r, 0) += x.at(a - 1, 0) * y.at(b - 1, 0) * v.at(r, 0);
      }
    }
    return acc;
  };
  return brk(ji, jj) - j_frame_ * brk(ji, ej) - j_frame_ * brk(ei, jj) -
         brk(ei, ej);
}

int AlmostComplex::nijenhuis_rank() const {
  // rank of mubar : A^{1,0} -> A^{0,2}; columns are mubar(phi^j).
  const FormBasis& b1 = g_->basis(1);
  const Matrix mubar = component_matrix(Bidegree::MuBar, 1);
  Matrix img(g_->basis(2).size(), m());
  for (int j = 0; j < m(); ++j) {
    Matrix phi(b1.size(), 1);
    for (int i = 0; i < b1.size(); ++i) phi.at(i, 0) = coframe_.at(j, i);
    img.set_col(j, mubar * phi);
  }
  return img.rank();
}

Form AlmostComplex::phi_form(
    const std::vector<std::pair<std::vector<int>, Scalar>>& terms) const {
  Form acc(n(), 0);
  for (const auto& [letters, coeff] : terms) {
    Form part = coeff * Form::unit(n());
    for (int l : letters) {
      if (l == 0 || std::abs(l) > m())
        throw std::out_of_range("phi index out of range");
      Form cov(n(), 1);
      for (int i = 0; i < n(); ++i) {
        const Scalar& c = l > 0 ? coframe_.at(l - 1, i)
                                : coframe_.at(-l - 1, i).conj();
        if (!c.is_zero()) cov += c * Form::covector(n(), i + 1);
      }
      part = wedge(part, cov);
    }
    acc += part;
  }
  return acc;
}

std::string AlmostComplex::phi_str(const Form& a) const {
  const FormBasis& basis = g_->basis(a.degree());
  const Matrix y = phi_matrix_inverse(a.degree()) * a.coords(basis);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < basis.size(); ++i) {
    if (y.at(i, 0).is_zero()) continue;
    std::string cs = y.at(i, 0).str();
    std::string mono = "phi(";
    bool firstidx = true;
    for (int idx : word_indices(basis.word(i))) {
      if (!firstidx) mono += ",";
      mono += idx <= m() ? std::to_string(idx) : "-" + std::to_string(idx - m());
      firstidx = false;
    }
    mono += ")";
    if (a.degree() == 0) mono = "";
    if (cs == "1" && !mono.empty()) {
      os << (first ? "" : " + ") << mono;
    } else if (cs == "-1" && !mono.empty()) {
      os << (first ? "-" : " - ") << mono;
    } else {
      const bool composite = cs.find('+') != std::string::npos ||
                             cs.find('-', 1) != std::string::npos;
      std::string sep = first ? "" : " + ";
      if (!composite && cs.front() == '-') {
        sep = first ? "-" : " - ";
        cs = cs.substr(1);
      } else if (composite) {
        cs = "(" + cs + ")";
      }
      os << sep << cs << (mono.empty() ? "" : "*" + mono);
    }
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace acx
