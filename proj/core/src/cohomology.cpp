#include "acx/cohomology.hpp"

#include <stdexcept>

namespace acx {

namespace {

// X solving target_basis * X = M * source_basis: the matrix of M
// restricted to the subspaces. Throws when M does not map source into
// target; this is how closure assertions surface.
Matrix restrict_matrix(const Matrix& m, const Subspace& source,
                       const Subspace& target, const char* what) {
  const auto sol = target.basis_cols().solve(m * source.basis_cols());
  if (!sol) throw std::logic_error(std::string("closure failure: ") + what);
  return *sol;
}

}  // namespace

Cohomology::Cohomology(const AlmostComplex& acs) : acs_(&acs) {
  cache_.resize(static_cast<size_t>(acs.n()) + 1);
}

Matrix Cohomology::op_matrix(OpSym s, int k) const {
  switch (s) {
    case OpSym::d: return algebra().d_matrix(k);
    case OpSym::dc: return acs_->dc_matrix(k);
    case OpSym::delta: return acs_->delta_matrix(k);
    case OpSym::deltabar: return acs_->deltabar_matrix(k);
    default: throw std::invalid_argument("unsupported symbol here");
  }
}

Matrix Cohomology::anticommutator(int k) const {
  const int n = this->n();
  const int out = k + 2 <= n ? algebra().basis(k + 2).size() : 0;
  Matrix acc(out, algebra().basis(k).size());
  if (k + 1 <= n) {
    acc += acs_->dc_matrix(k + 1) * algebra().d_matrix(k);
    acc += algebra().d_matrix(k + 1) * acs_->dc_matrix(k);
  }
  return acc;
}

Cohomology::Cache& Cohomology::cache(int k) const {
  if (k < 0 || k > n()) throw std::out_of_range("cohomology degree");
  auto& c = cache_[static_cast<size_t>(k)];
  if (!c.b_ready) {
    c.b = kernel_basis(anticommutator(k));
    c.b_ready = true;
  }
  if (!c.c_ready) {
    const int dim = algebra().basis(k).size();
    c.c_div = k >= 2 ? image_basis(anticommutator(k - 2)) : Subspace::zero(dim);
    const QuotientSpace q(Subspace::full(dim), c.c_div);
    c.c_sect = q.representatives().transpose();
    // Projection: bottom block of the inverse of [divisor | section].
    const Matrix lift = c.c_div.basis_cols().hcat(c.c_sect);
    const Matrix inv = lift.inverse();
    Matrix proj(q.dim(), dim);
    for (int i = 0; i < q.dim(); ++i)
      for (int j = 0; j < dim; ++j)
        proj.at(i, j) = inv.at(c.c_div.dim() + i, j);
    c.c_proj = std::move(proj);
    c.c_ready = true;
  }
  return c;
}

const Subspace& Cohomology::b_space(int k) const { return cache(k).b; }

Matrix Cohomology::b_restricted(OpSym s, int k) const {
  if (k < 0 || k > n()) throw std::out_of_range("b_restricted degree");
  if (k == n()) return Matrix(0, b_space(k).dim());
  return restrict_matrix(op_matrix(s, k), b_space(k), b_space(k + 1),
                         "operator does not preserve the B complex");
}

Matrix Cohomology::b_ddc(int k) const {
  if (k + 2 > n()) return Matrix(0, b_space(k).dim());
  const Matrix ddc = algebra().d_matrix(k + 1) * acs_->dc_matrix(k);
  return restrict_matrix(ddc, b_space(k), b_space(k + 2),
                         "dd^c does not preserve the B complex");
}

int Cohomology::c_dim(int k) const { return c_projection(k).rows(); }

const Subspace& Cohomology::c_divisor(int k) const { return cache(k).c_div; }
const Matrix& Cohomology::c_projection(int k) const { return cache(k).c_proj; }
const Matrix& Cohomology::c_section(int k) const { return cache(k).c_sect; }

Matrix Cohomology::c_descended(OpSym s, int k) const {
  if (k + 1 > n()) return Matrix(0, c_dim(k));
  const Matrix op = op_matrix(s, k);
  // Well-defined iff the divisor maps into the divisor upstairs.
  const Subspace img = c_divisor(k).apply(op);
  if (!c_divisor(k + 1).contains(img))
    throw std::logic_error("descent failure on the C complex");
  return c_projection(k + 1) * op * c_section(k);
}

Matrix Cohomology::c_ddc(int k) const {
  if (k + 2 > n()) return Matrix(0, c_dim(k));
  const Matrix ddc = algebra().d_matrix(k + 1) * acs_->dc_matrix(k);
  const Subspace img = c_divisor(k).apply(ddc);
  if (!c_divisor(k + 2).contains(img))
    throw std::logic_error("descent failure for dd^c on the C complex");
  return c_projection(k + 2) * ddc * c_section(k);
}

Cohomology::QData Cohomology::bc_qdata(int k) const {
  QData q;
  q.numerator = kernel_basis(algebra().d_matrix(k))
                    .intersect(kernel_basis(acs_->dc_matrix(k)));
  if (k >= 2) {
    const Matrix ddc = algebra().d_matrix(k - 1) * acs_->dc_matrix(k - 2);
    q.divisor = image_basis(ddc * b_space(k - 2).basis_cols());
  } else {
    q.divisor = Subspace::zero(algebra().basis(k).size());
  }
  if (!q.numerator.contains(q.divisor))
    throw std::logic_error("Bott-Chern divisor escapes the numerator");
  q.quotient = QuotientSpace(q.numerator, q.divisor);
  return q;
}

Cohomology::QData Cohomology::aeppli_qdata(int k) const {
  QData q;
  q.numerator = kernel_basis(c_ddc(k));
  if (k >= 1) {
    q.divisor = image_basis(c_descended(OpSym::d, k - 1))
                    .sum(image_basis(c_descended(OpSym::dc, k - 1)));
  } else {
    q.divisor = Subspace::zero(c_dim(k));
  }
  if (!q.numerator.contains(q.divisor))
    throw std::logic_error("Aeppli divisor escapes the numerator");
  q.quotient = QuotientSpace(q.numerator, q.divisor);
  return q;
}

CohomologySpace Cohomology::make_space(const std::string& tag, int k,
                                       ComplexTag ct, const QData& q,
                                       const Matrix* lift) const {
  CohomologySpace s;
  s.tag = tag;
  s.degree = k;
  s.complex_tag = ct;
  s.dim = q.quotient.dim();
  const FormBasis& basis = algebra().basis(k);
  for (int i = 0; i < s.dim; ++i) {
    Matrix rep = q.quotient.representatives().row(i).transpose();
    if (lift) rep = *lift * rep;
    s.reps.push_back(Form::from_coords(basis, rep));
  }
  return s;
}

CohomologySpace Cohomology::bott_chern(int k) const {
  return make_space("d+dc", k, ComplexTag::B, bc_qdata(k));
}

CohomologySpace Cohomology::aeppli(int k) const {
  const Matrix lift = c_section(k);
  return make_space("ddc", k, ComplexTag::C, aeppli_qdata(k), &lift);
}

CohomologySpace Cohomology::de_rham(int k) const {
  QData q;
  q.numerator = kernel_basis(algebra().d_matrix(k));
  q.divisor = k >= 1 ? image_basis(algebra().d_matrix(k - 1))
                     : Subspace::zero(algebra().basis(k).size());
  q.quotient = QuotientSpace(q.numerator, q.divisor);
  return make_space("dR", k, ComplexTag::Full, q);
}

CohomologySpace Cohomology::dc_cohomology(int k) const {
  QData q;
  q.numerator = kernel_basis(acs_->dc_matrix(k));
  q.divisor = k >= 1 ? image_basis(acs_->dc_matrix(k - 1))
                     : Subspace::zero(algebra().basis(k).size());
  q.quotient = QuotientSpace(q.numerator, q.divisor);
  return make_space("dc", k, ComplexTag::Full, q);
}

CohomologySpace Cohomology::even_cohomology(int k) const {
  // Image of closed even forms inside de Rham cohomology.
  QData q;
  const Subspace parity =
      image_basis(acs_->parity_matrix(k, Parity::Even));
  q.numerator = kernel_basis(algebra().d_matrix(k)).intersect(parity);
  const Subspace exact = k >= 1 ? image_basis(algebra().d_matrix(k - 1))
                                : Subspace::zero(algebra().basis(k).size());
  q.divisor = q.numerator.intersect(exact);
  q.quotient = QuotientSpace(q.numerator, q.divisor);
  return make_space("ev", k, ComplexTag::Full, q);
}

CohomologySpace Cohomology::odd_cohomology(int k) const {
  QData q;
  const Subspace parity = image_basis(acs_->parity_matrix(k, Parity::Odd));
  q.numerator = kernel_basis(algebra().d_matrix(k)).intersect(parity);
  const Subspace exact = k >= 1 ? image_basis(algebra().d_matrix(k - 1))
                                : Subspace::zero(algebra().basis(k).size());
  q.divisor = q.numerator.intersect(exact);
  q.quotient = QuotientSpace(q.numerator, q.divisor);
  return make_space("od", k, ComplexTag::Full, q);
}

CohomologySpace Cohomology::delta_cohomology(int k, bool bar) const {
  const OpSym s = bar ? OpSym::deltabar : OpSym::delta;
  QData q;
  q.numerator = kernel_basis(b_restricted(s, k));
  q.divisor = k >= 1 ? image_basis(b_restricted(s, k - 1))
                     : Subspace::zero(b_space(k).dim());
  if (!q.numerator.contains(q.divisor))
    throw std::logic_error("delta does not square to zero on B");
  q.quotient = QuotientSpace(q.numerator, q.divisor);
  const Matrix lift = b_space(k).basis_cols();
  return make_space(bar ? "deltabar" : "delta", k, ComplexTag::B, q, &lift);
}

CohomologySpace Cohomology::delta_bott_chern(int k) const {
  QData q;
  q.numerator = kernel_basis(acs_->delta_matrix(k))
                    .intersect(kernel_basis(acs_->deltabar_matrix(k)));
  if (k >= 2) {
    const Matrix dd = acs_->delta_matrix(k - 1) * acs_->deltabar_matrix(k - 2);
    q.divisor = image_basis(dd * b_space(k - 2).basis_cols());
  } else {
    q.divisor = Subspace::zero(algebra().basis(k).size());
  }
  if (!q.numerator.contains(q.divisor))
    throw std::logic_error("delta deltabar divisor escapes the numerator");
  q.quotient = QuotientSpace(q.numerator, q.divisor);
  return make_space("delta+deltabar", k, ComplexTag::B, q);
}

CohomologySpace Cohomology::delta_aeppli(int k) const {
  QData q;
  Matrix dd_c(0, c_dim(k));
  if (k + 2 <= n()) {
    const Matrix dd = acs_->delta_matrix(k + 1) * acs_->deltabar_matrix(k);
    const Subspace img = c_divisor(k).apply(dd);
    if (!c_divisor(k + 2).contains(img))
      throw std::logic_error("descent failure for delta deltabar");
    dd_c = c_projection(k + 2) * dd * c_section(k);
  }
  q.numerator = kernel_basis(dd_c);
  if (k >= 1) {
    q.divisor = image_basis(c_descended(OpSym::delta, k - 1))
                    .sum(image_basis(c_descended(OpSym::deltabar, k - 1)));
  } else {
    q.divisor = Subspace::zero(c_dim(k));
  }
  if (!q.numerator.contains(q.divisor))
    throw std::logic_error("delta Aeppli divisor escapes the numerator");
  q.quotient = QuotientSpace(q.numerator, q.divisor);
  const Matrix lift = c_section(k);
  return make_space("deltadeltabar", k, ComplexTag::C, q, &lift);
}

bool Cohomology::delta_equals_ddc_bott_chern(int k) const {
  const QData a = bc_qdata(k);
  QData b;
  b.numerator = kernel_basis(acs_->delta_matrix(k))
                    .intersect(kernel_basis(acs_->deltabar_matrix(k)));
  if (k >= 2) {
    const Matrix dd = acs_->delta_matrix(k - 1) * acs_->deltabar_matrix(k - 2);
    b.divisor = image_basis(dd * b_space(k - 2).basis_cols());
  } else {
    b.divisor = Subspace::zero(algebra().basis(k).size());
  }
  return a.numerator == b.numerator && a.divisor == b.divisor;
}

bool Cohomology::delta_equals_ddc_aeppli(int k) const {
  const QData a = aeppli_qdata(k);
  // Rebuild the delta version of the numerator and divisor in C-coords.
  Matrix dd_c(0, c_dim(k));
  if (k + 2 <= n()) {
    const Matrix dd = acs_->delta_matrix(k + 1) * acs_->deltabar_matrix(k);
    dd_c = c_projection(k + 2) * dd * c_section(k);
  }
  const Subspace num = kernel_basis(dd_c);
  Subspace div = k >= 1
                     ? image_basis(c_descended(OpSym::delta, k - 1))
                           .sum(image_basis(c_descended(OpSym::deltabar, k - 1)))
                     : Subspace::zero(c_dim(k));
  return a.numerator == num && a.divisor == div;
}

Cohomology::Splitting Cohomology::bc_splitting(int k) const {
  Splitting out;
  const Subspace closed = kernel_basis(algebra().d_matrix(k))
                              .intersect(kernel_basis(acs_->dc_matrix(k)));
  const int dim_k = algebra().basis(k).size();
  auto part = [&](Parity numer_par, Parity divisor_par,
                  const std::string& tag) {
    QData q;
    q.numerator = closed.intersect(
        image_basis(acs_->parity_matrix(k, numer_par)));
    if (k >= 2) {
      const Matrix ddc = algebra().d_matrix(k - 1) * acs_->dc_matrix(k - 2);
      const Subspace src = b_space(k - 2).intersect(
          image_basis(acs_->parity_matrix(k - 2, divisor_par)));
      q.divisor = src.dim() ? image_basis(ddc * src.basis_cols())
                            : Subspace::zero(dim_k);
    } else {
      q.divisor = Subspace::zero(dim_k);
    }
    if (!q.numerator.contains(q.divisor))
      throw std::logic_error("parity Bott-Chern divisor escapes numerator");
    q.quotient = QuotientSpace(q.numerator, q.divisor);
    return make_space(tag, k, ComplexTag::B, q);
  };
  // dd^c is odd on B, so the even numerator pairs with the odd divisor.
  out.even = part(Parity::Even, Parity::Odd, "BC_ev");
  out.odd = part(Parity::Odd, Parity::Even, "BC_od");
  out.bc_dim = bott_chern(k).dim;
  out.dims_ok = out.even.dim + out.odd.dim == out.bc_dim;
  return out;
}

CohomologySpace Cohomology::bigraded_low_degree(int p, int q) const {
  const bool low = (p == 1 && q == 0) || (p == 0 && q == 1) ||
                   (p == 2 && q == 0) || (p == 0 && q == 2);
  if (!low && !(p == 1 && q == 1))
    throw std::invalid_argument("bigraded Bott-Chern: unsupported (p,q)");
  const int k = p + q;
  QData data;
  const Subspace pq = image_basis(acs_->projector(k, p, q));
  data.numerator = kernel_basis(algebra().d_matrix(k)).intersect(pq);
  if (low) {
    const Subspace dc_side =
        kernel_basis(acs_->dc_matrix(k)).intersect(pq);
    if (!(data.numerator == dc_side))
      throw std::logic_error(
          "d-closed and dc-closed (p,q)-forms differ in a low bidegree");
    data.divisor = Subspace::zero(algebra().basis(k).size());
  } else {
    // (1,1): divide by dd^c of scalars in B^0.
    const Matrix ddc0 = algebra().d_matrix(1) * acs_->dc_matrix(0);
    data.divisor = image_basis(ddc0 * b_space(0).basis_cols());
    if (!data.numerator.contains(data.divisor))
      throw std::logic_error("bigraded (1,1) divisor escapes numerator");
  }
  data.quotient = QuotientSpace(data.numerator, data.divisor);
  return make_space("H^{" + std::to_string(p) + "," + std::to_string(q) + "}",
                    k, ComplexTag::Full, data);
}

Matrix Cohomology::pairing_class(const Form& bc_rep, const Form& a_rep) const {
  const Form w = wedge(bc_rep, a_rep);
  const int deg = bc_rep.degree() + a_rep.degree();
  if (deg > n()) return Matrix(0, 1);  // zero class by degree overflow
  const QData q = aeppli_qdata(deg);
  return q.quotient.class_coords(c_projection(deg) *
                                 w.coords(algebra().basis(deg)));
}

PairingCheck Cohomology::module_pairing_check(const Form& bc_rep,
                                              const Form& a_rep,
                                              const Form& b_move,
                                              const Form& eta_move,
                                              const Form& theta_move) const {
  PairingCheck out;
  const int k = bc_rep.degree();
  Form bc2 = bc_rep;
  if (k >= 2) {
    if (!b_space(k - 2).contains(b_move.coords(algebra().basis(k - 2))))
      throw std::invalid_argument("representative move must come from B");
    bc2 += algebra().d(acs_->dc(b_move));
  }
  const Form a2 = a_rep + algebra().d(eta_move) + acs_->dc(theta_move);
  const Matrix base = pairing_class(bc_rep, a_rep);
  out.well_defined =
      base == pairing_class(bc2, a_rep) && base == pairing_class(bc_rep, a2) &&
      base == pairing_class(bc2, a2);
  const Matrix unit = pairing_class(Form::unit(n()), a_rep);
  const QData q = aeppli_qdata(a_rep.degree());
  out.unit_acts_trivially =
      unit ==
      q.quotient.class_coords(c_projection(a_rep.degree()) *
                              a_rep.coords(algebra().basis(a_rep.degree())));
  out.pairing_class_dim = base.rows();
  return out;
}

DiagramReport Cohomology::diagram_maps(int k) const {
  DiagramReport r;
  const QData bc = bc_qdata(k);
  QData dr;
  dr.numerator = kernel_basis(algebra().d_matrix(k));
  dr.divisor = k >= 1 ? image_basis(algebra().d_matrix(k - 1))
                      : Subspace::zero(algebra().basis(k).size());
  dr.quotient = QuotientSpace(dr.numerator, dr.divisor);
  QData dc;
  dc.numerator = kernel_basis(acs_->dc_matrix(k));
  dc.divisor = k >= 1 ? image_basis(acs_->dc_matrix(k - 1))
                      : Subspace::zero(algebra().basis(k).size());
  dc.quotient = QuotientSpace(dc.numerator, dc.divisor);
  const QData ae = aeppli_qdata(k);
  r.dim_bc = bc.quotient.dim();
  r.dim_dr = dr.quotient.dim();
  r.dim_dc = dc.quotient.dim();
  r.dim_a = ae.quotient.dim();

  auto map_matrix = [&](const QData& from, const QData& to, bool via_c,
                        const Matrix* pre) {
    Matrix m(to.quotient.dim(), from.quotient.dim());
    for (int i = 0; i < from.quotient.dim(); ++i) {
      Matrix rep = from.quotient.representatives().row(i).transpose();
      if (pre) rep = *pre * rep;
      if (via_c) rep = c_projection(k) * rep;
      m.set_col(i, to.quotient.class_coords(rep));
    }
    return m;
  };

  const Matrix bc_to_dr = map_matrix(bc, dr, false, nullptr);
  const Matrix bc_to_dc = map_matrix(bc, dc, false, nullptr);
  const Matrix dr_to_a = map_matrix(dr, ae, true, nullptr);
  const Matrix dc_to_a = map_matrix(dc, ae, true, nullptr);
  r.rank_bc_to_dr = bc_to_dr.rank();
  r.rank_bc_to_dc = bc_to_dc.rank();
  r.rank_dr_to_a = dr_to_a.rank();
  r.rank_dc_to_a = dc_to_a.rank();

  const Matrix jinv = acs_->j_matrix_inverse(k);
  const Matrix j_map = map_matrix(dr, dc, false, &jinv);
  r.j_iso_ok = r.dim_dr == r.dim_dc && j_map.rank() == r.dim_dr;
  r.square_commutes = dr_to_a * bc_to_dr == dc_to_a * bc_to_dc;
  return r;
}

std::pair<int, int> Cohomology::harmonic_injection(const OperatorContext& ctx,
                                                   HarmonicOp p, int k) const {
  const HarmonicSpace hs = harmonic_space(ctx, p, k);
  const bool to_bc = p == HarmonicOp::DplusDc || p == HarmonicOp::DcplusD;
  const bool to_a = p == HarmonicOp::DDc || p == HarmonicOp::DcD;
  if (!to_bc && !to_a)
    throw std::invalid_argument("no cohomology target for this operator");
  const QData q = to_bc ? bc_qdata(k) : aeppli_qdata(k);
  Matrix classes(q.quotient.dim(), hs.h());
  for (int i = 0; i < hs.h(); ++i) {
    Matrix rep = hs.space.basis().row(i).transpose();
    if (to_a) rep = c_projection(k) * rep;
    classes.set_col(i, q.quotient.class_coords(rep));
  }
  return {hs.h(), classes.rank()};
}

}  // namespace acx
