#include "heisym/aut_h3.hpp"
#include "heisym/grading.hpp"
#include "heisym/rng.hpp"

#include <doctest.h>

using namespace heisym;

TEST_CASE("eigenspace grading of h3 under the diagonal Klein four-group") {
  LieAlgebra h3 = heisenberg(1);
  Grading g = grading_from_involutions(
      h3, {tau(InvolutionTag::tau1(0, 0)), tau(InvolutionTag::tau2(0, 0))});
  CHECK(g.component(0) == Subspace::zero(3));
  CHECK(g.component(1) == Subspace::span(3, {unit_vec(3, 0)}));
  CHECK(g.component(2) == Subspace::span(3, {unit_vec(3, 1)}));
  CHECK(g.component(3) == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(check_grading(g).empty());
  CHECK(is_irreducible(g));
  CHECK(support(g) == std::vector<unsigned>{1, 2, 3});
}

TEST_CASE("degenerate involution lists") {
  LieAlgebra h3 = heisenberg(1);
  Grading none = grading_from_involutions(h3, {});
  CHECK(none.k() == 0);
  CHECK(none.component(0) == Subspace::full(3));
  CHECK(check_grading(none).empty());

  Grading all_in_identity(h3, 1, {Subspace::full(3), Subspace::zero(3)});
  CHECK(support(all_in_identity) == std::vector<unsigned>{0});
  CHECK_FALSE(is_irreducible(all_in_identity));

  Grading single = grading_from_involutions(h3, {tau(InvolutionTag::tau4(0, 0))});
  CHECK(single.component(0) == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(single.component(1) == Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)}));
  CHECK(support(single) == std::vector<unsigned>{0, 1});
}

TEST_CASE("grading_from_involutions validates its input") {
  LieAlgebra h3 = heisenberg(1);
  CHECK_THROWS_AS(grading_from_involutions(h3, {Matrix::diagonal({1, 1, -1})}),
                  std::invalid_argument);  // not an automorphism
  CHECK_THROWS_AS(grading_from_involutions(h3, {aut_matrix({1, 1, 0, 1, 0, 0})}),
                  std::invalid_argument);  // not involutive
  CHECK_THROWS_AS(
      grading_from_involutions(
          h3, {tau(InvolutionTag::tau1(0, 0)), tau(InvolutionTag::tau3(0, 1, 0))}),
      std::invalid_argument);  // the pair does not commute
}

TEST_CASE("eigenvectors are stable under the defining involutions") {
  Rng rng(41);
  LieAlgebra h3 = heisenberg(1);
  for (int t = 0; t < 10; ++t) {
    Rational a3 = rng.rational(3, 2), a5 = rng.rational(3, 2), a6 = rng.rational(3, 2);
    Matrix t1 = tau(InvolutionTag::tau1(a3, a6));
    Matrix t2 = tau(InvolutionTag::tau2(-a3, a5));
    Grading g = grading_from_involutions(h3, {t1, t2});
    CHECK(check_grading(g).empty());
    for (unsigned bits = 0; bits < 4; ++bits) {
      const Subspace& comp = g.component(bits);
      for (std::size_t i = 0; i < comp.dim(); ++i) {
        Vec v = comp.basis().row(i);
        Rational s1 = (bits & 1u) ? -1 : 1;
        Rational s2 = (bits & 2u) ? -1 : 1;
        CHECK(t1.apply(v) == scale(s1, v));
        CHECK(t2.apply(v) == scale(s2, v));
      }
    }
  }
}

TEST_CASE("check_grading catches bad labelings") {
  LieAlgebra h3 = heisenberg(1);
  // [g0, g1] must stay in g1 but [X1, X2] = X3 lands in g0.
  Grading bad(h3, 1,
              {Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 2)}),
               Subspace::span(3, {unit_vec(3, 1)})});
  CHECK_FALSE(check_grading(bad).empty());

  // Components overlapping is a direct-sum failure.
  Grading overlap(h3, 1,
                  {Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)}),
                   Subspace::span(3, {unit_vec(3, 1), unit_vec(3, 2)})});
  CHECK_FALSE(check_grading(overlap).empty());
}

TEST_CASE("equivalence of gradings") {
  Grading ga = heisenberg_grading(HeisenbergGradingName::H3Z2A, 1);
  Grading gb = heisenberg_grading(HeisenbergGradingName::H3Z2B, 1);
  Matrix swap_pi = tau(InvolutionTag::tau3(0, 1, 0));
  CHECK(equivalent_under(ga, gb, swap_pi, {0, 1}));
  CHECK(equivalent_under(ga, ga, Matrix::identity(3), {0, 1}));
  CHECK_FALSE(equivalent_under(ga, gb, Matrix::identity(3), {0, 1}));

  CHECK_THROWS_AS(equivalent_under(ga, gb, Matrix::diagonal({1, 1, -1}), {0, 1}),
                  std::invalid_argument);  // pi not an automorphism
  CHECK_THROWS_AS(equivalent_under(ga, gb, swap_pi, {1, 0}),
                  std::invalid_argument);  // omega does not fix the identity

  auto witness = find_equivalence_witness_h3(ga, gb);
  REQUIRE(witness);
  CHECK(equivalent_under(ga, gb, witness->first, witness->second));

  // Any automorphism fixing every component setwise is a self-equivalence.
  Grading z22 = heisenberg_grading(HeisenbergGradingName::Z22, 1);
  CHECK(equivalent_under(z22, z22, Matrix::diagonal({2, 3, 6}), {0, 1, 2, 3}));
}

TEST_CASE("label automorphisms") {
  CHECK(is_label_automorphism({0, 1}, 1));
  CHECK_FALSE(is_label_automorphism({1, 0}, 1));
  CHECK(is_label_automorphism({0, 2, 1, 3}, 2));  // swap the two generators
  CHECK(is_label_automorphism({0, 3, 1, 2}, 2));
  CHECK_FALSE(is_label_automorphism({0, 1, 1, 2}, 2));
}

TEST_CASE("heisenberg grading catalog") {
  for (std::size_t p : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
    CHECK(check_grading(heisenberg_grading(HeisenbergGradingName::Z2Center, p)).empty());
    CHECK(check_grading(heisenberg_grading(HeisenbergGradingName::Z2Odd, p)).empty());
    CHECK(check_grading(heisenberg_grading(HeisenbergGradingName::Z2Even, p)).empty());
    CHECK(check_grading(heisenberg_grading(HeisenbergGradingName::Z22, p)).empty());
    for (std::size_t k = 1; k < p; ++k)
      CHECK(check_grading(heisenberg_grading(HeisenbergGradingName::Z2Sub, p, k)).empty());
  }

  Grading z22 = heisenberg_grading(HeisenbergGradingName::Z22, 2);
  CHECK(z22.component(0) == Subspace::zero(5));
  CHECK(z22.component(1) == Subspace::span(5, {unit_vec(5, 0), unit_vec(5, 2)}));
  CHECK(z22.component(2) == Subspace::span(5, {unit_vec(5, 1), unit_vec(5, 3)}));
  CHECK(z22.component(3) == Subspace::span(5, {unit_vec(5, 4)}));
  CHECK(is_irreducible(z22));

  Grading center1 = heisenberg_grading(HeisenbergGradingName::Z2Center, 1);
  CHECK(center1.component(0) == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(center1.component(1) == Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)}));

  CHECK_THROWS_AS(heisenberg_grading(HeisenbergGradingName::Z2Sub, 2, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(heisenberg_grading(HeisenbergGradingName::Z2Sub, 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(heisenberg_grading(HeisenbergGradingName::H3Z2A, 2),
                  std::invalid_argument);
}
