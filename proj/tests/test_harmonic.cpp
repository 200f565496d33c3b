#include "doctest.h"

#include "acx/checks.hpp"
#include "acx/manifest.hpp"

using namespace acx;

namespace {

Subspace phi_span(const Model& model, int degree,
                  const std::vector<std::vector<std::pair<std::vector<int>, Scalar>>>& gens) {
  Matrix rows(static_cast<int>(gens.size()),
              model.algebra->basis(degree).size());
  for (size_t i = 0; i < gens.size(); ++i) {
    const Form f = model.acs->phi_form(gens[i]);
    const Matrix v = f.coords(model.algebra->basis(degree));
    for (int j = 0; j < v.rows(); ++j)
      rows.at(static_cast<int>(i), j) = v.at(j, 0);
  }
  return Subspace::span_rows(rows);
}

const Scalar one{1};

}  // namespace

TEST_CASE("laplacians") {
  const Model t4 = build_model(example_catalog("torus_4"));
  const OperatorContext tctx = t4.context();
  for (int k = 0; k <= 4; ++k)
    CHECK(laplacian_matrix(tctx, HarmonicOp::D, k).is_zero());
  const Model kt = build_model(example_catalog("kt"));
  const OperatorContext ctx = kt.context();
  SUBCASE("the d+dc Laplacian on scalars kills exactly the constants") {
    const Subspace ker = kernel_basis(laplacian_matrix(ctx, HarmonicOp::DplusDc, 0));
    CHECK(ker.dim() == 1);
    CHECK(ker.contains(Form::unit(4).coords(kt.algebra->basis(0))));
  }
  SUBCASE("J conjugates the two Bott-Chern type Laplacians") {
    for (int k = 0; k <= 4; ++k)
      CHECK(laplacian_matrix(ctx, HarmonicOp::DplusDc, k) *
                kt.acs->j_matrix(k) ==
            kt.acs->j_matrix(k) * laplacian_matrix(ctx, HarmonicOp::DcplusD, k));
  }
  SUBCASE("star conjugates sum-type into product-type Laplacians") {
    for (int k = 0; k <= 4; ++k) {
      CHECK(kt.metric->star_matrix(k) *
                laplacian_matrix(ctx, HarmonicOp::DplusDc, k) ==
            laplacian_matrix(ctx, HarmonicOp::DDc, 4 - k) *
                kt.metric->star_matrix(k));
      CHECK(kt.metric->star_matrix(k) *
                laplacian_matrix(ctx, HarmonicOp::DcplusD, k) ==
            laplacian_matrix(ctx, HarmonicOp::DcD, 4 - k) *
                kt.metric->star_matrix(k));
    }
  }
}

TEST_CASE("KT harmonic spaces reproduce the printed bases") {
  const Model kt = build_model(example_catalog("kt"));
  const OperatorContext ctx = kt.context();
  CHECK(harmonic_space(ctx, HarmonicOp::DplusDc, 0).space ==
        phi_span(kt, 0, {{{{}, one}}}));
  CHECK(harmonic_space(ctx, HarmonicOp::DplusDc, 1).space ==
        phi_span(kt, 1, {{{{1}, one}}, {{{-1}, one}}}));
  CHECK(harmonic_space(ctx, HarmonicOp::DplusDc, 2).space ==
        phi_span(kt, 2, {{{{1, 2}, one}, {{-1, -2}, one}},
                         {{{1, -2}, one}, {{-1, 2}, one}},
                         {{{1, -1}, one}},
                         {{{2, -2}, one}}}));
  CHECK(harmonic_space(ctx, HarmonicOp::DplusDc, 3).space ==
        phi_span(kt, 3, {{{{1, 2, -2}, one}},
                         {{{2, -1, -2}, one}},
                         {{{1, 2, -1}, one}, {{1, -1, -2}, -one}}}));
  CHECK(harmonic_space(ctx, HarmonicOp::DplusDc, 4).space ==
        phi_span(kt, 4, {{{{1, 2, -1, -2}, one}}}));
}

TEST_CASE("h tables") {
  const Model kt = build_model(example_catalog("kt"));
  const HTable t = h_table(kt.context(), {HarmonicOp::DplusDc}, 0, 4);
  CHECK(t.rows[0].second == std::vector<int>{1, 2, 4, 3, 1});
  CHECK(t.betti == std::vector<int>{1, 3, 4, 3, 1});
  const Model t4 = build_model(example_catalog("torus_4"));
  CHECK(h_table(t4.context(), {HarmonicOp::DplusDc}, 0, 4).rows[0].second ==
        std::vector<int>{1, 4, 6, 4, 1});
  const HTable sym = h_table(kt.context(), {HarmonicOp::DplusDLam}, 1, 2);
  CHECK(sym.rows[0].second == std::vector<int>{3, 5});
}

TEST_CASE("harmonic isomorphism square") {
  const Model kt = build_model(example_catalog("kt"));
  const OperatorContext ctx = kt.context();
  for (int k = 0; k <= 4; ++k) {
    const auto r = harmonic_isomorphism_check(ctx, k);
    CAPTURE(k);
    CHECK(r.ok());
  }
  SUBCASE("star image of degree-1 harmonics is the degree-3 product space") {
    const Subspace lhs = harmonic_space(ctx, HarmonicOp::DplusDc, 1)
                             .space.apply(kt.metric->star_matrix(1));
    CHECK(lhs == harmonic_space(ctx, HarmonicOp::DDc, 3).space);
  }
  SUBCASE("Cor 4.8 arithmetic in degree 3") {
    CHECK(harmonic_space(ctx, HarmonicOp::DplusDc, 3).h() == 3);
    CHECK(harmonic_space(ctx, HarmonicOp::DDc, 1).h() == 3);
  }
  SUBCASE("torus: every space is the full invariant space") {
    const Model t4 = build_model(example_catalog("torus_4"));
    const OperatorContext tctx = t4.context();
    for (int k = 0; k <= 4; ++k) {
      const auto r = harmonic_isomorphism_check(tctx, k);
      CHECK(r.ok());
      CHECK(harmonic_space(tctx, HarmonicOp::DplusDc, k).h() ==
            t4.algebra->basis(k).size());
    }
  }
}

TEST_CASE("metric independence of h1") {
  const Model kt = build_model(example_catalog("kt"));
  std::vector<Metric> metrics;
  metrics.push_back(Metric::frame_identity(*kt.acs));
  for (int v = 1; v < 4; ++v)
    metrics.push_back(compatible_metric_variant(*kt.acs, v));
  // one more by hand: diag(1,1,4,4) is J-compatible on KT
  Matrix g = Matrix::identity(4);
  g.at(2, 2) = Scalar(4);
  g.at(3, 3) = Scalar(4);
  metrics.emplace_back(*kt.acs, g);
  const auto rep = metric_independence_probe(*kt.acs, metrics);
  CHECK(rep.h1_equal);
  CHECK(rep.h1 == 2);
  SUBCASE("higher degrees may differ but degree 0 and top never do") {
    for (const auto& row : rep.h_rows) {
      CHECK(row[0] == 1);
      CHECK(row[4] == 1);
    }
  }
  SUBCASE("torus h1 equals 2m for any compatible metric") {
    const Model t4 = build_model(example_catalog("torus_4"));
    std::vector<Metric> tm;
    tm.push_back(Metric::frame_identity(*t4.acs));
    tm.push_back(compatible_metric_variant(*t4.acs, 1));
    const auto trep = metric_independence_probe(*t4.acs, tm);
    CHECK(trep.h1_equal);
    CHECK(trep.h1 == 4);
  }
  SUBCASE("sol3 at t = 1/2 has h1 = 0 for several metrics") {
    const Model sol = build_model(example_catalog("sol3_t@1/2"));
    std::vector<Metric> sm;
    for (int v = 0; v < 3; ++v)
      sm.push_back(compatible_metric_variant(*sol.acs, v));
    const auto srep = metric_independence_probe(*sol.acs, sm);
    CHECK(srep.h1_equal);
    CHECK(srep.h1 == 0);
  }
  SUBCASE("incompatible metrics are rejected") {
    Matrix bad = Matrix::identity(4);
    bad.at(0, 0) = Scalar(3);
    CHECK_THROWS_AS(Metric(*kt.acs, bad), ValidationError);
  }
}

TEST_CASE("almost Kahler checks on KT") {
  const Model kt = build_model(example_catalog("kt"));
  const auto rep = almost_kahler_checks(kt.context());
  CHECK(rep.h2 == 4);
  CHECK(rep.b_minus == 2);
  CHECK(rep.h_minus_j == 1);
  CHECK(rep.decomposition_ok);
  CHECK(rep.count_ok);
  CHECK(rep.degree3_equal);
  CHECK(rep.degree2_included);
  CHECK(rep.h2_dlam == 5);
  CHECK(rep.h1_dlam == 3);
  SUBCASE("the degree-2 inclusion is strict on KT") {
    CHECK(rep.h2 < rep.h2_dlam);
  }
  SUBCASE("non almost Kahler inputs are rejected") {
    const Model sol = build_model(example_catalog("sol3_t@1/2"));
    CHECK_THROWS_AS(almost_kahler_checks(sol.context()), ValidationError);
  }
}

TEST_CASE("delta-harmonic spaces and the strictness witness") {
  const Model kt = build_model(example_catalog("kt"));
  const OperatorContext ctx = kt.context();
  const Subspace dd = harmonic_space(ctx, HarmonicOp::DeltaPlusBar, 3).space;
  const Subspace cb = harmonic_space(ctx, HarmonicOp::DcplusD, 3).space;
  const Subspace bc = harmonic_space(ctx, HarmonicOp::DplusDc, 3).space;
  CHECK(dd == phi_span(kt, 3, {{{{1, 2, -2}, one}}, {{{2, -1, -2}, one}}}));
  CHECK(cb.contains(dd));
  const Subspace meet = dd.intersect(cb);
  CHECK(meet.dim() == 2);
  CHECK(bc.dim() == 3);
  CHECK(bc.contains(meet));
  CHECK_FALSE(meet.contains(bc));
  SUBCASE("the six inclusion laws hold in every degree") {
    for (int k = 0; k <= 4; ++k) {
      const Subspace a = harmonic_space(ctx, HarmonicOp::DplusDc, k).space;
      const Subspace b = harmonic_space(ctx, HarmonicOp::DcplusD, k).space;
      const Subspace c = harmonic_space(ctx, HarmonicOp::DeltaPlusBar, k).space;
      CHECK(c.contains(a.intersect(b)));
      CHECK(b.contains(a.intersect(c)));
      CHECK(a.contains(c.intersect(b)));
      const Subspace p = harmonic_space(ctx, HarmonicOp::DDc, k).space;
      const Subspace q = harmonic_space(ctx, HarmonicOp::DcD, k).space;
      const Subspace r = harmonic_space(ctx, HarmonicOp::DeltaDeltaBar, k).space;
      CHECK(r.contains(p.intersect(q)));
      CHECK(q.contains(p.intersect(r)));
      CHECK(p.contains(r.intersect(q)));
      CHECK(harmonic_space(ctx, HarmonicOp::D, k)
                .space.intersect(harmonic_space(ctx, HarmonicOp::Dc, k).space) ==
            harmonic_space(ctx, HarmonicOp::Delta, k)
                .space.intersect(
                    harmonic_space(ctx, HarmonicOp::DeltaBar, k).space));
    }
  }
}

TEST_CASE("hodge decomposition is exact and orthogonal") {
  const Model kt = build_model(example_catalog("kt"));
  const OperatorContext ctx = kt.context();
  for (HarmonicOp p : {HarmonicOp::DplusDc, HarmonicOp::DDc}) {
    for (int k = 0; k <= 4; ++k) {
      const Matrix lap = laplacian_matrix(ctx, p, k);
      const Subspace ker = kernel_basis(lap);
      const Subspace img = image_basis(lap);
      CHECK(ker.dim() + img.dim() == kt.algebra->basis(k).size());
      CHECK(ker.intersect(img).dim() == 0);
      CHECK((ker.basis() * kt.metric->hermitian_gram(k) *
             img.basis_cols().conj())
                .is_zero());
    }
  }
}
