#include "doctest.h"

#include "acx/checks.hpp"
#include "acx/manifest.hpp"

using namespace acx;

namespace {

const Scalar one{1};

Matrix phi_coords(const Model& model, int degree,
                  std::vector<std::pair<std::vector<int>, Scalar>> term) {
  return model.acs->phi_form(term).coords(model.algebra->basis(degree));
}

}  // namespace

TEST_CASE("B and C complexes") {
  const Model t4 = build_model(example_catalog("torus_4"));
  Cohomology tcoh(*t4.acs);
  for (int k = 0; k <= 4; ++k) {
    CHECK(tcoh.b_space(k) == Subspace::full(t4.algebra->basis(k).size()));
    CHECK(tcoh.c_dim(k) == t4.algebra->basis(k).size());
  }
  const Model kt = build_model(example_catalog("kt"));
  Cohomology coh(*kt.acs);
  SUBCASE("on KT the anticommutator already cuts down degree 1") {
    CHECK(coh.b_space(1).dim() == 2);
    CHECK(coh.b_space(1).contains(
        Form::covector(4, 1).coords(kt.algebra->basis(1))));
    CHECK(coh.b_space(1).contains(
        Form::covector(4, 2).coords(kt.algebra->basis(1))));
    CHECK_FALSE(coh.b_space(1).contains(
        Form::covector(4, 3).coords(kt.algebra->basis(1))));
    // in degree 2 both dd^c and d^cd vanish into the top degree, so
    // the anticommutator kernel is everything
    CHECK(coh.b_space(2) == Subspace::full(6));
  }
  SUBCASE("C dims follow rank-nullity") {
    for (int k = 2; k <= 4; ++k) {
      const Matrix anti = kt.algebra->d_matrix(k - 1) * kt.acs->dc_matrix(k - 2) +
                          kt.acs->dc_matrix(k - 1) * kt.algebra->d_matrix(k - 2);
      CHECK(coh.c_dim(k) == kt.algebra->basis(k).size() - anti.rank());
    }
  }
  SUBCASE("restricted operators anticommute on B") {
    for (int k = 0; k + 2 <= 4; ++k)
      CHECK((coh.b_restricted(OpSym::d, k + 1) * coh.b_restricted(OpSym::dc, k) +
             coh.b_restricted(OpSym::dc, k + 1) * coh.b_restricted(OpSym::d, k))
                .is_zero());
  }
}

TEST_CASE("Bott-Chern cohomology") {
  const Model kt = build_model(example_catalog("kt"));
  Cohomology coh(*kt.acs);
  CHECK(coh.bott_chern(0).dim == 1);
  CHECK(coh.bott_chern(1).dim == 2);
  SUBCASE("harmonic spaces inject") {
    const OperatorContext ctx = kt.context();
    for (int k = 0; k <= 4; ++k) {
      for (HarmonicOp p : {HarmonicOp::DplusDc, HarmonicOp::DcplusD}) {
        const auto [h, image] = coh.harmonic_injection(ctx, p, k);
        CHECK(h == image);
      }
    }
  }
  SUBCASE("equality with harmonic spaces in degrees 0 and 1") {
    const OperatorContext ctx = kt.context();
    for (int k : {0, 1})
      CHECK(coh.bott_chern(k).dim ==
            harmonic_space(ctx, HarmonicOp::DplusDc, k).h());
  }
}

TEST_CASE("Aeppli cohomology") {
  const Model kt = build_model(example_catalog("kt"));
  Cohomology coh(*kt.acs);
  CHECK(coh.aeppli(0).dim == 1);
  CHECK(coh.aeppli(4).dim == 1);
  CHECK(coh.aeppli(3).dim == 2);
  CHECK(coh.aeppli(3).dim == coh.bott_chern(1).dim);
  SUBCASE("harmonic product spaces inject, isos in low and top degrees") {
    const OperatorContext ctx = kt.context();
    for (int k = 0; k <= 4; ++k)
      for (HarmonicOp p : {HarmonicOp::DDc, HarmonicOp::DcD}) {
        const auto [h, image] = coh.harmonic_injection(ctx, p, k);
        CHECK(h == image);
      }
    for (int k : {0, 3, 4})
      CHECK(coh.aeppli(k).dim == harmonic_space(ctx, HarmonicOp::DDc, k).h());
  }
}

TEST_CASE("classical cohomologies") {
  const Model kt = build_model(example_catalog("kt"));
  Cohomology coh(*kt.acs);
  std::vector<int> dr, dc;
  for (int k = 0; k <= 4; ++k) {
    dr.push_back(coh.de_rham(k).dim);
    dc.push_back(coh.dc_cohomology(k).dim);
  }
  CHECK(dr == std::vector<int>{1, 3, 4, 3, 1});
  CHECK(dc == dr);
  SUBCASE("even and odd pieces of degree 2 match the 4-manifold picture") {
    // H^2_ev = H^-_J and H^2_od = H^+_J; on KT these have dims 1 and 3.
    CHECK(coh.even_cohomology(2).dim == 1);
    CHECK(coh.odd_cohomology(2).dim == 3);
  }
}

TEST_CASE("delta cohomologies coincide with the d, dc ones") {
  for (const char* name : {"kt", "torus_4", "sol3_t@1/4"}) {
    CAPTURE(name);
    const Model model = build_model(example_catalog(name));
    Cohomology coh(*model.acs);
    for (int k = 0; k <= model.manifest.dim; ++k) {
      CHECK(coh.delta_equals_ddc_bott_chern(k));
      CHECK(coh.delta_equals_ddc_aeppli(k));
      CHECK(coh.delta_bott_chern(k).dim == coh.bott_chern(k).dim);
      CHECK(coh.delta_aeppli(k).dim == coh.aeppli(k).dim);
    }
  }
  SUBCASE("torus delta cohomology has the full binomial dimensions") {
    const Model t4 = build_model(example_catalog("torus_4"));
    Cohomology coh(*t4.acs);
    for (int k = 0; k <= 4; ++k)
      CHECK(coh.delta_cohomology(k, false).dim == t4.algebra->basis(k).size());
  }
}

TEST_CASE("parity splitting of Bott-Chern cohomology") {
  const Model kt = build_model(example_catalog("kt"));
  Cohomology coh(*kt.acs);
  for (int k = 0; k <= 4; ++k) {
    const auto s = coh.bc_splitting(k);
    CAPTURE(k);
    CHECK(s.dims_ok);
  }
  SUBCASE("degree 1 splits one and one") {
    const auto s = coh.bc_splitting(1);
    CHECK(s.even.dim == 1);  // the (0,1) class of conj phi^1
    CHECK(s.odd.dim == 1);   // the (1,0) class of phi^1
    CHECK(s.bc_dim == 2);
  }
  SUBCASE("torus splitting adds up degreewise") {
    const Model t4 = build_model(example_catalog("torus_4"));
    Cohomology tcoh(*t4.acs);
    for (int k = 0; k <= 4; ++k) {
      const auto s = tcoh.bc_splitting(k);
      CHECK(s.dims_ok);
      CHECK(s.bc_dim == tcoh.bott_chern(k).dim);
    }
  }
}

TEST_CASE("bigraded low-degree groups") {
  const Model kt = build_model(example_catalog("kt"));
  Cohomology coh(*kt.acs);
  const auto h10 = coh.bigraded_low_degree(1, 0);
  CHECK(h10.dim == 1);
  REQUIRE(h10.reps.size() == 1);
  CHECK(Subspace::span_rows(
            h10.reps[0].coords(kt.algebra->basis(1)).transpose()) ==
        Subspace::span_rows(
            phi_coords(kt, 1, {{{1}, one}}).transpose()));
  CHECK(coh.bigraded_low_degree(2, 0).dim == 0);
  CHECK(coh.bigraded_low_degree(0, 2).dim == 0);
  CHECK(coh.bigraded_low_degree(1, 1).dim == 3);
  CHECK_THROWS_AS(coh.bigraded_low_degree(2, 1), std::invalid_argument);
  SUBCASE("degree-1 splitting against the parity split") {
    const auto s = coh.bc_splitting(1);
    CHECK(s.odd.dim == coh.bigraded_low_degree(1, 0).dim);
    CHECK(s.even.dim == coh.bigraded_low_degree(0, 1).dim);
  }
  SUBCASE("nakamura has a single closed (1,0) class") {
    const Model nk = build_model(example_catalog("nakamura_j1"));
    Cohomology ncoh(*nk.acs);
    CHECK(ncoh.bigraded_low_degree(1, 0).dim == 1);
    CHECK(ncoh.bott_chern(1).dim == 2);
  }
}

TEST_CASE("module pairing") {
  const Model kt = build_model(example_catalog("kt"));
  Cohomology coh(*kt.acs);
  const Form omega = kt.symplectic->omega();
  const Form unit = Form::unit(4);
  SUBCASE("pairing with the unit is the identity map") {
    const auto check = coh.module_pairing_check(
        unit, omega, Form(4, 0), Form::covector(4, 1), Form::covector(4, 2));
    CHECK(check.well_defined);
    CHECK(check.unit_acts_trivially);
  }
  SUBCASE("omega wedges the unit Aeppli class to its own class") {
    const Matrix cls = coh.pairing_class(omega, unit);
    const Matrix direct = coh.pairing_class(unit, omega);
    CHECK(cls == direct);
  }
  SUBCASE("moving representatives does not move the class") {
    // alpha = phi^1 wedge conj(phi^1) is d- and dc-closed; gamma = omega.
    const Form alpha = kt.acs->phi_word({1, -1});
    const auto check = coh.module_pairing_check(
        alpha, omega, Form(4, 0), Form::covector(4, 3), Form::covector(4, 4));
    CHECK(check.well_defined);
  }
  SUBCASE("degree overflow pairs to the zero class") {
    const Form three = Form::monomial(4, word_from_indices({1, 2, 3}), one);
    CHECK(coh.pairing_class(three, omega).rows() == 0);
  }
}

TEST_CASE("diagram of cohomologies") {
  const Model t4 = build_model(example_catalog("torus_4"));
  Cohomology tcoh(*t4.acs);
  for (int k = 0; k <= 4; ++k) {
    const auto d = tcoh.diagram_maps(k);
    CHECK(d.j_iso_ok);
    CHECK(d.square_commutes);
    // on the torus every map is an isomorphism
    CHECK(d.rank_bc_to_dr == d.dim_bc);
    CHECK(d.dim_bc == d.dim_dr);
    CHECK(d.rank_dr_to_a == d.dim_dr);
    CHECK(d.dim_dr == d.dim_a);
  }
  const Model kt = build_model(example_catalog("kt"));
  Cohomology coh(*kt.acs);
  SUBCASE("KT degree 1: Bott-Chern injects into de Rham with corank 1") {
    const auto d = coh.diagram_maps(1);
    CHECK(d.dim_bc == 2);
    CHECK(d.dim_dr == 3);
    CHECK(d.rank_bc_to_dr == 2);
    CHECK(d.j_iso_ok);
    CHECK(d.square_commutes);
  }
  SUBCASE("KT shows non-bijective diagram maps") {
    // in degree 2 the invariant de Rham to Aeppli map happens to be
    // bijective; degree 3 is where it degenerates (3-dim onto 2-dim)
    const auto d2 = coh.diagram_maps(2);
    CHECK(d2.rank_dr_to_a == 4);
    const auto d3 = coh.diagram_maps(3);
    CHECK(d3.dim_dr == 3);
    CHECK(d3.dim_a == 2);
    CHECK(d3.rank_dr_to_a < d3.dim_dr);  // kernel is nonzero
  }
}

TEST_CASE("cohomology check list per example") {
  for (const char* name : {"kt", "torus_4", "sol3_t@0", "nakamura_j1"}) {
    CAPTURE(name);
    const Model model = build_model(example_catalog(name));
    Cohomology coh(*model.acs);
    const CheckList checks = cohomology_checks(model.context(), coh);
    for (const auto& [label, ok] : checks.items) {
      CAPTURE(label);
      CHECK(ok);
    }
  }
}
