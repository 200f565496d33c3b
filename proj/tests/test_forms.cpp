#include "doctest.h"

#include "acx/manifest.hpp"

using namespace acx;

namespace {

Form mono(int n, std::vector<int> idx, long num = 1, long den = 1) {
  return Form::monomial(n, word_from_indices(idx), Scalar(num, den, 0, 1));
}

LieAlgebra bad_jacobi() {
  // [e1,e2] = e3, [e1,e3] = e1 only
  std::vector c(4, std::vector(4, std::vector<Rat>(4, Rat(0))));
  c[2][0][1] = 1;
  c[0][0][2] = 1;
  return LieAlgebra(4, std::move(c));
}

}  // namespace

TEST_CASE("jacobi identity") {
  CHECK(LieAlgebra::abelian(4).jacobi_ok());
  const Model kt = build_model(example_catalog("kt"));
  CHECK(kt.algebra->jacobi_ok());
  const auto witness = bad_jacobi().jacobi_witness();
  REQUIRE(witness.has_value());
  CHECK(*witness == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("unimodularity") {
  CHECK(build_model(example_catalog("kt")).algebra->unimodular());
  CHECK(build_model(example_catalog("sol3_t@0")).algebra->unimodular());
  // [e1,e2] = e2 has tr ad_{e1} = 1
  std::vector c(2, std::vector(2, std::vector<Rat>(2, Rat(0))));
  c[1][0][1] = 1;
  const LieAlgebra g(2, std::move(c));
  CHECK_FALSE(g.unimodular());
  CHECK_THROWS_AS(g.require_unimodular(), ValidationError);
}

TEST_CASE("structure differentials") {
  const Model kt = build_model(example_catalog("kt"));
  CHECK(kt.algebra->d(Form::covector(4, 4)) == -mono(4, {2, 3}));
  const Model sol = build_model(example_catalog("sol3_t@0"));
  CHECK(sol.algebra->d(Form::covector(4, 3)) == -mono(4, {1, 3}));
  // Leibniz expansion by hand: d(e1 ∧ e4) = e1 ∧ e23 = e123
  CHECK(kt.algebra->d(mono(4, {1, 4})) == mono(4, {1, 2, 3}));
  // top degree maps to the zero form
  CHECK(kt.algebra->d(mono(4, {1, 2, 3, 4})).is_zero());
}

TEST_CASE("wedge") {
  const int n = 4;
  CHECK(wedge(mono(n, {1, 2}), Form::covector(n, 1)).is_zero());
  const Form a = mono(n, {1, 3});
  CHECK(wedge(Form::unit(n), a) == a);
  SUBCASE("graded commutativity on sampled pairs") {
    const Form b = mono(n, {2}) + mono(n, {4}, 3, 2);
    const Form c = mono(n, {1}) + mono(n, {3}, -1, 5);
    CHECK(wedge(b, c) == -wedge(c, b));          // 1-forms anticommute
    CHECK(wedge(a, wedge(b, c)) == wedge(wedge(a, b), c));
  }
  SUBCASE("complex covector product expands over four real words") {
    const Form phi1 = Form::covector(n, 1) + Scalar::i() * Form::covector(n, 2);
    const Form phi2 = Form::covector(n, 3) + Scalar::i() * Form::covector(n, 4);
    const Form w = wedge(phi1, phi2);
    CHECK(w.coeffs().size() == 4);
    CHECK(w.coeff(word_from_indices({1, 3})) == Scalar(1));
    CHECK(w.coeff(word_from_indices({1, 4})) == Scalar::i());
    CHECK(w.coeff(word_from_indices({2, 3})) == Scalar::i());
    CHECK(w.coeff(word_from_indices({2, 4})) == Scalar(-1));
  }
}

TEST_CASE("d squares to zero and satisfies Leibniz") {
  for (const char* name : {"kt", "sol3_t@1/4", "nakamura_j1", "torus_6"}) {
    const Model model = build_model(example_catalog(name));
    const LieAlgebra& g = *model.algebra;
    for (int k = 0; k + 2 <= g.dim(); ++k)
      CHECK((g.d_matrix(k + 1) * g.d_matrix(k)).is_zero());
    // Leibniz on a basis-exhaustive sample of low-degree pairs
    for (int i = 1; i <= g.dim(); ++i)
      for (int j = 1; j <= g.dim(); ++j) {
        if (i == j) continue;
        const Form a = Form::covector(g.dim(), i);
        const Form b = Form::covector(g.dim(), j);
        CHECK(g.d(wedge(a, b)) ==
              wedge(g.d(a), b) - wedge(a, g.d(b)));
      }
  }
}

TEST_CASE("invariant Betti numbers of the KT algebra") {
  const Model kt = build_model(example_catalog("kt"));
  CHECK(kt.algebra->betti() == std::vector<int>{1, 3, 4, 3, 1});
}

TEST_CASE("form coordinates round trip and printing") {
  const FormBasis basis(4, 2);
  CHECK(basis.size() == 6);
  // lexicographic order: 12, 13, 14, 23, 24, 34
  CHECK(basis.word(2) == word_from_indices({1, 4}));
  CHECK(basis.word(3) == word_from_indices({2, 3}));
  const Form f = mono(4, {1, 4}, -1, 2) + mono(4, {2, 3}, 5);
  CHECK(Form::from_coords(basis, f.coords(basis)) == f);
  CHECK(f.str() == "-1/2*e14 + 5*e23");
}
