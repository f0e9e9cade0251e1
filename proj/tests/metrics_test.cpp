#include "heisym/aut_h3.hpp"
#include "heisym/metrics.hpp"
#include "heisym/rng.hpp"

#include <doctest.h>

using namespace heisym;

namespace {

Grading h3_z22() { return heisenberg_grading(HeisenbergGradingName::Z22, 1); }

}  // namespace

TEST_CASE("reductive splits") {
  Grading g = h3_z22();
  ReductiveSplit split = reductive_split(g);
  CHECK(split.h() == Subspace::zero(3));
  CHECK(split.m() == Subspace::full(3));
  CHECK(split.m_basis() == Matrix::identity(3));
  CHECK(split.m_labels() == std::vector<unsigned>{1, 2, 3});

  Grading central = heisenberg_grading(HeisenbergGradingName::Z2Center, 1);
  ReductiveSplit split2 = reductive_split(central);
  CHECK(split2.h() == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(split2.m_basis() == Matrix{{1, 0, 0}, {0, 1, 0}});

  LieAlgebra h3 = heisenberg(1);
  Grading invalid(h3, 1,
                  {Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 2)}),
                   Subspace::span(3, {unit_vec(3, 1)})});
  CHECK_THROWS_AS(reductive_split(invalid), std::invalid_argument);
}

TEST_CASE("split coordinates") {
  ReductiveSplit split = reductive_split(heisenberg_grading(HeisenbergGradingName::Z2Odd, 2));
  // m = evens + center; X4 sits at m-index 1.
  CHECK(split.m_coords(unit_vec(5, 3)) == Vec{0, 1, 0});
  CHECK(split.ambient_from_m({0, 1, 0}) == unit_vec(5, 3));
  CHECK_THROWS_AS(split.m_coords(unit_vec(5, 0)), std::invalid_argument);
  Vec mixed = add(unit_vec(5, 0), unit_vec(5, 1));  // X1 in h plus X2 in m
  CHECK(split.m_coords_of_projection(mixed) == Vec{1, 0, 0});
  CHECK(split.h_coords(mixed) == Vec{1, 0});
}

TEST_CASE("invariant form space on the two symmetric splits of h3") {
  ReductiveSplit no_metric =
      reductive_split(heisenberg_grading(HeisenbergGradingName::H3Z2A, 1));
  FormSpace fs = invariant_form_space(no_metric);
  REQUIRE(fs.dimension() == 1);
  CHECK(fs.basis[0] == Matrix{{1, 0}, {0, 0}});
  CHECK(common_radical(fs) == Subspace::span(2, {unit_vec(2, 1)}));

  ReductiveSplit central =
      reductive_split(heisenberg_grading(HeisenbergGradingName::Z2Center, 1));
  FormSpace all = invariant_form_space(central);
  CHECK(all.dimension() == 3);
  CHECK(common_radical(all) == Subspace::zero(2));
}

TEST_CASE("orthogonality constraints cut the space down to diagonals") {
  Grading g = h3_z22();
  ReductiveSplit split = reductive_split(g);
  FormSpace fs = invariant_form_space(split, g);
  REQUIRE(fs.dimension() == 3);
  for (const auto& b : fs.basis)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) CHECK(b(i, j) == 0);
}

TEST_CASE("invariance equations hold for every basis form") {
  for (std::size_t p : {std::size_t{1}, std::size_t{2}}) {
    Grading g = heisenberg_grading(HeisenbergGradingName::Z2Odd, p);
    ReductiveSplit split = reductive_split(g);
    FormSpace fs = invariant_form_space(split);
    for (const auto& b : fs.basis) {
      SymBilinearForm form(b, split);
      for (std::size_t z = 0; z < split.h().dim(); ++z) {
        Vec zv = split.h().basis().row(z);
        for (std::size_t i = 0; i < split.m_dim(); ++i)
          for (std::size_t j = 0; j < split.m_dim(); ++j) {
            Vec bi = split.m_coords(split.algebra().bracket(zv, split.m_basis().row(i)));
            Vec bj = split.m_coords(split.algebra().bracket(zv, split.m_basis().row(j)));
            Rational lhs = form.eval(bi, split.m_coords(split.m_basis().row(j))) +
                           form.eval(split.m_coords(split.m_basis().row(i)), bj);
            CHECK(lhs == 0);
          }
      }
    }
  }
}

TEST_CASE("metric classification") {
  Grading g = h3_z22();
  ReductiveSplit split = reductive_split(g);

  CHECK(classify_metric(SymBilinearForm(Matrix::diagonal({1, 1, 4}), split), g).kind ==
        MetricKind::RiemannianZ2k);
  CHECK(classify_metric(SymBilinearForm(Matrix::diagonal({-1, 1, 1}), split), g).kind ==
        MetricKind::LorentzianCaseI);
  MetricVerdict case2 = classify_metric(
      SymBilinearForm(Matrix{{1, 0, 0}, {0, -1, 1}, {0, 1, 0}}, split), g);
  CHECK(case2.kind == MetricKind::LorentzianCaseII);
  CHECK(case2.degenerate_label == 3u);
  CHECK(classify_metric(SymBilinearForm(Matrix::diagonal({1, 1, 0}), split), g).kind ==
        MetricKind::NoneDegenerate);
  CHECK(classify_metric(SymBilinearForm(Matrix::diagonal({1, -1, -1}), split), g).kind ==
        MetricKind::PseudoRiemannian);
  // Positive definite but with coupled components: not a graded metric.
  CHECK(classify_metric(SymBilinearForm(Matrix{{2, 1, 0}, {1, 2, 0}, {0, 0, 1}}, split), g)
            .kind == MetricKind::PseudoRiemannian);
}

TEST_CASE("pullback") {
  Grading g = h3_z22();
  ReductiveSplit split = reductive_split(g);
  SymBilinearForm b(Matrix::diagonal({4, 9, 36}), split);

  CHECK(pullback(Matrix::identity(3), b).mat == b.mat);
  Matrix scaling = Matrix::diagonal({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  CHECK(pullback(scaling, b).mat == Matrix::identity(3));

  Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    Matrix sym(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) sym(i, j) = sym(j, i) = rng.rational(4, 3);
    AutParams p{rng.rational(), rng.rational(), rng.rational(), rng.rational(),
                rng.rational(), rng.rational()};
    if (p.delta() == 0) continue;
    SymBilinearForm form(sym, split);
    CHECK(signature(pullback(aut_matrix(p), form).mat) == signature(sym));
  }

  // A map that moves m outside itself is rejected.
  ReductiveSplit central =
      reductive_split(heisenberg_grading(HeisenbergGradingName::Z2Center, 1));
  SymBilinearForm small(Matrix::identity(2), central);
  CHECK_THROWS_AS(pullback(aut_matrix({1, 0, 0, 1, 1, 0}), small), std::invalid_argument);
}

TEST_CASE("pullback preserves the classification on component-preserving maps") {
  Grading g = h3_z22();
  ReductiveSplit split = reductive_split(g);
  Rng rng(52);
  for (int t = 0; t < 15; ++t) {
    Rational s = rng.nonzero_rational(3, 2), u = rng.nonzero_rational(3, 2);
    Matrix diag_aut = Matrix::diagonal({s, u, s * u});
    Matrix sym(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) sym(i, j) = sym(j, i) = rng.rational(4, 3);
    SymBilinearForm form(sym, split);
    CHECK(classify_metric(pullback(diag_aut, form), g).kind ==
          classify_metric(form, g).kind);
  }
}

TEST_CASE("riemannian invariant") {
  ReductiveSplit split = reductive_split(h3_z22());
  RiemannianNormalForm nf =
      riemannian_invariant_h3(SymBilinearForm(Matrix::diagonal({4, 9, 36}), split));
  CHECK(nf.lambda_sq == 1);
  REQUIRE(nf.witness);
  CHECK(*nf.witness == Matrix::diagonal({Rational(1, 2), Rational(1, 3), Rational(1, 6)}));

  CHECK(riemannian_invariant_h3(SymBilinearForm(Matrix::diagonal({1, 1, 9}), split))
            .lambda_sq == 9);
  // Non-square leading coefficients still give the invariant, no witness.
  RiemannianNormalForm no_witness =
      riemannian_invariant_h3(SymBilinearForm(Matrix::diagonal({2, 1, 1}), split));
  CHECK(no_witness.lambda_sq == Rational(1, 2));
  CHECK_FALSE(no_witness.witness);

  CHECK_THROWS_AS(
      riemannian_invariant_h3(SymBilinearForm(Matrix::diagonal({-1, 1, 1}), split)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      riemannian_invariant_h3(SymBilinearForm(Matrix{{1, 1, 0}, {1, 2, 0}, {0, 0, 1}}, split)),
      std::invalid_argument);
}

TEST_CASE("lorentzian normal forms") {
  Grading g = h3_z22();
  ReductiveSplit split = reductive_split(g);

  LorentzianNormalForm plane =
      lorentzian_normal_form_h3(SymBilinearForm(Matrix::diagonal({-1, 1, 1}), split), g);
  CHECK(plane.tag == LorentzTag::NegOnPlane);
  CHECK(plane.lambda_sq == 1);

  LorentzianNormalForm center =
      lorentzian_normal_form_h3(SymBilinearForm(Matrix::diagonal({1, 1, -4}), split), g);
  CHECK(center.tag == LorentzTag::NegOnCenter);
  CHECK(center.lambda_sq == 4);
  CHECK(center.canonical == Matrix::diagonal({1, 1, -4}));

  LorentzianNormalForm case2 = lorentzian_normal_form_h3(
      SymBilinearForm(Matrix{{1, 0, 0}, {0, -1, 1}, {0, 1, 0}}, split), g);
  CHECK(case2.tag == LorentzTag::CaseII);
  CHECK_FALSE(case2.lambda_sq);

  LorentzianNormalForm off = lorentzian_normal_form_h3(
      SymBilinearForm(Matrix{{0, 1, 0}, {1, -1, 0}, {0, 0, 1}}, split), g);
  CHECK(off.tag == LorentzTag::ReducesToCaseI);

  CHECK_THROWS_AS(
      lorentzian_normal_form_h3(SymBilinearForm(Matrix::identity(3), split), g),
      std::invalid_argument);
}

TEST_CASE("dual basis change of coordinates") {
  CHECK(dual_change_check(0, 0, 0));
  CHECK(dual_change_check(2, 0, 0));
  CHECK(dual_change_check(2, 4, 6));
  CHECK(dual_change_check(Rational(1, 2), Rational(-3, 4), Rational(5, 6)));
  CHECK(dual_change_check());
}
