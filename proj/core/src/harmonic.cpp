#include "acx/harmonic.hpp"

#include <stdexcept>

namespace acx {

namespace {

constexpr Letter ld{OpSym::d, false}, lds{OpSym::d, true};
constexpr Letter lc{OpSym::dc, false}, lcs{OpSym::dc, true};
constexpr Letter le{OpSym::delta, false}, les{OpSym::delta, true};
constexpr Letter lb{OpSym::deltabar, false}, lbs{OpSym::deltabar, true};
constexpr Letter ll{OpSym::dLam, false}, lls{OpSym::dLam, true};

// The six summands of the Bott-Chern style Laplacian for a pair of
// anti-commuting-on-B operators (P, Q):
//   PQ(PQ)* + (PQ)*PQ + P*Q(P*Q)* + (P*Q)*P*Q + P*P + Q*Q
std::vector<OperatorWord> bc_laplacian(Letter p, Letter q) {
  Letter ps{p.sym, !p.adjoint}, qs{q.sym, !q.adjoint};
  return {
      {p, q, qs, ps}, {qs, ps, p, q}, {ps, q, qs, p},
      {qs, p, ps, q}, {ps, p},        {qs, q},
  };
}

// Aeppli style:
//   PQ(PQ)* + (PQ)*PQ + PQ*(PQ*)* + (PQ*)*PQ* + PP* + QQ*
std::vector<OperatorWord> aeppli_laplacian(Letter p, Letter q) {
  Letter ps{p.sym, !p.adjoint}, qs{q.sym, !q.adjoint};
  return {
      {p, q, qs, ps}, {qs, ps, p, q}, {p, qs, q, ps},
      {q, ps, p, qs}, {p, ps},        {q, qs},
  };
}

std::vector<OperatorWord> hodge_laplacian(Letter p) {
  Letter ps{p.sym, !p.adjoint};
  return {{p, ps}, {ps, p}};
}

}  // namespace

std::string harmonic_op_name(HarmonicOp p) {
  switch (p) {
    case HarmonicOp::D: return "d";
    case HarmonicOp::Dc: return "dc";
    case HarmonicOp::DplusDc: return "d+dc";
    case HarmonicOp::DcplusD: return "dc+d";
    case HarmonicOp::DDc: return "ddc";
    case HarmonicOp::DcD: return "dcd";
    case HarmonicOp::Delta: return "delta";
    case HarmonicOp::DeltaBar: return "deltabar";
    case HarmonicOp::DeltaPlusBar: return "delta+deltabar";
    case HarmonicOp::DeltaDeltaBar: return "deltadeltabar";
    case HarmonicOp::DplusDLam: return "d+dLam";
    case HarmonicOp::DDLam: return "ddLam";
  }
  return "?";
}

std::optional<HarmonicOp> harmonic_op_from_name(const std::string& s) {
  for (HarmonicOp p : all_harmonic_ops())
    if (harmonic_op_name(p) == s) return p;
  return std::nullopt;
}

const std::vector<HarmonicOp>& all_harmonic_ops() {
  static const std::vector<HarmonicOp> ops = {
      HarmonicOp::D,        HarmonicOp::Dc,          HarmonicOp::DplusDc,
      HarmonicOp::DcplusD,  HarmonicOp::DDc,         HarmonicOp::DcD,
      HarmonicOp::Delta,    HarmonicOp::DeltaBar,    HarmonicOp::DeltaPlusBar,
      HarmonicOp::DeltaDeltaBar, HarmonicOp::DplusDLam, HarmonicOp::DDLam,
  };
  return ops;
}

bool op_needs_symplectic(HarmonicOp p) {
  return p == HarmonicOp::DplusDLam || p == HarmonicOp::DDLam;
}

// Adjoint marks always mean the Hermitian (Gram) adjoint. In the
// star-operator notation common for these Laplacians, -*(d dc)* is
// the Hermitian adjoint of the reversed composite dc d; the word
// lists below are arranged so that the d+dc harmonic space carries
// its usual bases and star conjugation exchanges d+dc with ddc (and
// dc+d with dcd) degreewise.
std::vector<OperatorWord> laplacian_words(HarmonicOp p) {
  switch (p) {
    case HarmonicOp::D: return hodge_laplacian(ld);
    case HarmonicOp::Dc: return hodge_laplacian(lc);
    case HarmonicOp::DplusDc: return bc_laplacian(lc, ld);
    case HarmonicOp::DcplusD: return bc_laplacian(ld, lc);
    case HarmonicOp::DDc: return aeppli_laplacian(ld, lc);
    case HarmonicOp::DcD: return aeppli_laplacian(lc, ld);
    case HarmonicOp::Delta: return hodge_laplacian(le);
    case HarmonicOp::DeltaBar: return hodge_laplacian(lb);
    case HarmonicOp::DeltaPlusBar: return bc_laplacian(le, lb);
    case HarmonicOp::DeltaDeltaBar: return aeppli_laplacian(le, lb);
    case HarmonicOp::DplusDLam: return bc_laplacian(ld, ll);
    case HarmonicOp::DDLam: return aeppli_laplacian(ld, ll);
  }
  throw std::logic_error("unknown harmonic op");
}

std::vector<OperatorWord> harmonic_conditions(HarmonicOp p) {
  switch (p) {
    case HarmonicOp::D: return {{ld}, {lds}};
    case HarmonicOp::Dc: return {{lc}, {lcs}};
    case HarmonicOp::DplusDc: return {{ld}, {lc}, {lds, lcs}};
    case HarmonicOp::DcplusD: return {{ld}, {lc}, {lcs, lds}};
    case HarmonicOp::DDc: return {{lds}, {lcs}, {ld, lc}};
    case HarmonicOp::DcD: return {{lds}, {lcs}, {lc, ld}};
    case HarmonicOp::Delta: return {{le}, {les}};
    case HarmonicOp::DeltaBar: return {{lb}, {lbs}};
    case HarmonicOp::DeltaPlusBar: return {{le}, {lb}, {lbs, les}};
    case HarmonicOp::DeltaDeltaBar: return {{les}, {lbs}, {le, lb}};
    case HarmonicOp::DplusDLam: return {{ld}, {ll}, {lls, lds}};
    case HarmonicOp::DDLam: return {{lds}, {lls}, {ld, ll}};
  }
  throw std::logic_error("unknown harmonic op");
}

Matrix laplacian_matrix(const OperatorContext& ctx, HarmonicOp p, int k) {
  if (!ctx.metric()) throw ValidationError("metric required for Laplacians");
  if (op_needs_symplectic(p) && !ctx.symplectic())
    throw ValidationError("symplectic form required for " +
                          harmonic_op_name(p));
  Matrix lap = ctx.compile_sum(laplacian_words(p), k);
  const Matrix adj = gram_adjoint(lap, ctx.metric()->hermitian_gram(k),
                                  ctx.metric()->hermitian_gram(k));
  if (!(adj == lap))
    throw std::logic_error("Laplacian failed the self-adjointness check");
  return lap;
}

HarmonicSpace harmonic_space(const OperatorContext& ctx, HarmonicOp p, int k) {
  Subspace space = Subspace::full(ctx.dim(k));
  for (const auto& w : harmonic_conditions(p))
    space = space.intersect(kernel_basis(ctx.compile(w, k)));
  const Subspace lap_kernel = kernel_basis(laplacian_matrix(ctx, p, k));
  if (!(space == lap_kernel))
    throw std::logic_error(
        "characterizing kernels disagree with ker Delta_P at degree " +
        std::to_string(k));
  return HarmonicSpace{p, k, std::move(space)};
}

std::vector<Form> HarmonicSpace::basis_forms(const LieAlgebra& g) const {
  std::vector<Form> out;
  for (int i = 0; i < space.dim(); ++i)
    out.push_back(
        Form::from_coords(g.basis(degree), space.basis().row(i).transpose()));
  return out;
}

HTable h_table(const OperatorContext& ctx, const std::vector<HarmonicOp>& ops,
               int deg_lo, int deg_hi) {
  HTable t;
  const auto betti = ctx.algebra().betti();
  for (int k = deg_lo; k <= deg_hi; ++k) {
    t.degrees.push_back(k);
    t.betti.push_back(betti[static_cast<size_t>(k)]);
  }
  for (HarmonicOp p : ops) {
    std::vector<int> row;
    for (int k = deg_lo; k <= deg_hi; ++k)
      row.push_back(harmonic_space(ctx, p, k).h());
    t.rows.emplace_back(p, std::move(row));
  }
  return t;
}

HarmonicIsoReport harmonic_isomorphism_check(const OperatorContext& ctx,
                                             int k) {
  HarmonicIsoReport r;
  const int n = ctx.n();
  const Subspace bc = harmonic_space(ctx, HarmonicOp::DplusDc, k).space;
  const Subspace cb = harmonic_space(ctx, HarmonicOp::DcplusD, k).space;
  const Subspace ae = harmonic_space(ctx, HarmonicOp::DDc, n - k).space;
  const Subspace ea = harmonic_space(ctx, HarmonicOp::DcD, n - k).space;
  const Matrix& star = ctx.metric()->star_matrix(k);
  r.j_iso = bc.apply(ctx.acs().j_matrix(k)) == cb;
  r.star_iso_bc = bc.apply(star) == ae;
  r.star_iso_dc = cb.apply(star) == ea;
  r.dims = {bc.dim(), cb.dim(), ae.dim(), ea.dim()};
  r.counts_equal = bc.dim() == cb.dim() && cb.dim() == ae.dim() &&
                   ae.dim() == ea.dim();
  return r;
}

MetricIndependenceReport metric_independence_probe(
    const AlmostComplex& acs, const std::vector<Metric>& metrics,
    const Symplectic* sympl) {
  MetricIndependenceReport rep;
  for (const Metric& m : metrics) {
    OperatorContext ctx(acs, &m, sympl);
    std::vector<int> row;
    for (int k = 0; k <= acs.n(); ++k)
      row.push_back(harmonic_space(ctx, HarmonicOp::DplusDc, k).h());
    rep.h_rows.push_back(std::move(row));
  }
  rep.h1_equal = true;
  for (const auto& row : rep.h_rows) {
    if (rep.h1 < 0) rep.h1 = row[1];
    if (row[1] != rep.h1) rep.h1_equal = false;
  }
  return rep;
}

Subspace harmonic_asd_2forms(const OperatorContext& ctx) {
  // *a = -a together with da = 0 and d*a = 0.
  const Matrix& star = ctx.metric()->star_matrix(2);
  const Matrix anti = star + Matrix::identity(ctx.dim(2));
  Subspace s = kernel_basis(anti);
  s = s.intersect(kernel_basis(ctx.algebra().d_matrix(2)));
  s = s.intersect(kernel_basis(ctx.compile({lds}, 2)));
  return s;
}

Subspace harmonic_j_anti_2forms(const OperatorContext& ctx) {
  const Matrix pure = ctx.acs().projector(2, 2, 0) +
                      ctx.acs().projector(2, 0, 2) -
                      Matrix::identity(ctx.dim(2));
  Subspace s = kernel_basis(pure);
  s = s.intersect(kernel_basis(ctx.algebra().d_matrix(2)));
  s = s.intersect(kernel_basis(ctx.compile({lds}, 2)));
  return s;
}

AlmostKahlerReport almost_kahler_checks(const OperatorContext& ctx) {
  if (ctx.n() != 4)
    throw ValidationError("almost Kahler checks require dimension 4");
  if (!ctx.symplectic() || !ctx.metric() ||
      !ctx.symplectic()->almost_kahler(ctx.acs(), *ctx.metric()))
    throw ValidationError("not an almost Kahler triple");
  AlmostKahlerReport r;
  const Subspace h2 = harmonic_space(ctx, HarmonicOp::DplusDc, 2).space;
  const Subspace asd = harmonic_asd_2forms(ctx);
  const Subspace janti = harmonic_j_anti_2forms(ctx);
  const Subspace omega_line = Subspace::span_rows(
      ctx.symplectic()->omega().coords(ctx.algebra().basis(2)).transpose());
  r.h2 = h2.dim();
  r.b_minus = asd.dim();
  r.h_minus_j = janti.dim();
  const Subspace total = omega_line.sum(asd).sum(janti);
  r.decomposition_ok =
      total == h2 &&
      total.dim() == omega_line.dim() + asd.dim() + janti.dim();
  r.count_ok = r.h2 == r.b_minus + 1 + r.h_minus_j;
  const Subspace h3 = harmonic_space(ctx, HarmonicOp::DplusDc, 3).space;
  const Subspace h3_dlam = harmonic_space(ctx, HarmonicOp::DplusDLam, 3).space;
  r.h3 = h3.dim();
  r.h3_dlam = h3_dlam.dim();
  r.degree3_equal = h3 == h3_dlam;
  const Subspace h2_dlam = harmonic_space(ctx, HarmonicOp::DplusDLam, 2).space;
  r.h2_dlam = h2_dlam.dim();
  r.degree2_included = h2_dlam.contains(h2);
  r.h1_dlam = harmonic_space(ctx, HarmonicOp::DplusDLam, 1).h();
  return r;
}

}  // namespace acx
