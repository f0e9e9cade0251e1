#include "heisym/connection.hpp"
#include "heisym/rng.hpp"

#include <doctest.h>

using namespace heisym;

namespace {

ReductiveSplit h3_split() {
  return reductive_split(heisenberg_grading(HeisenbergGradingName::Z22, 1));
}

ReductiveSplit l5_split() {
  LieAlgebra l5 = filiform_l5();
  Grading g(l5, 1,
            {Subspace::span(5, {unit_vec(5, 2), unit_vec(5, 4)}),
             Subspace::span(5, {unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 3)})});
  return reductive_split(g);
}

ConnectionMap random_connection(Rng& rng, const ReductiveSplit& split) {
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < split.m_dim(); ++i) {
    Matrix m(split.m_dim(), split.m_dim());
    for (std::size_t r = 0; r < split.m_dim(); ++r)
      for (std::size_t c = 0; c < split.m_dim(); ++c) m(r, c) = rng.rational(3, 2);
    maps.push_back(std::move(m));
  }
  return ConnectionMap(split, std::move(maps));
}

}  // namespace

TEST_CASE("isotropy representation") {
  ReductiveSplit central =
      reductive_split(heisenberg_grading(HeisenbergGradingName::Z2Center, 1));
  CHECK(isotropy_rep(central, unit_vec(3, 2)).is_zero());

  ReductiveSplit l5 = l5_split();
  CHECK(isotropy_rep(l5, zero_vec(5)).is_zero());
  CHECK(isotropy_rep(l5, unit_vec(5, 2)) == Matrix{{0, 0, 0}, {0, 0, 0}, {-1, 0, 0}});
  CHECK_THROWS_AS(isotropy_rep(l5, unit_vec(5, 0)), std::invalid_argument);
}

TEST_CASE("torsion and curvature of the canonical connections") {
  ReductiveSplit split = h3_split();
  ConnectionMap first = first_canonical(split);
  TorsionTensor t = torsion(first);
  CHECK(t.values[0][1] == Vec{0, 0, -1});
  CHECK(t.values[1][0] == Vec{0, 0, 1});
  CHECK(curvature(first).is_zero());

  ConnectionMap second = second_canonical(split);
  CHECK(torsion(second).is_zero());
  CHECK(second.maps[0].col(1) == Vec{0, 0, Rational(1, 2)});

  // With trivial isotropy the curvature of the half-bracket map measures the
  // failure of the bracket to be flat; on h3 it still vanishes.
  CHECK(curvature(second).is_zero());
}

TEST_CASE("torsion and curvature are antisymmetric") {
  Rng rng(61);
  for (auto split : {h3_split(), l5_split()}) {
    for (int t = 0; t < 12; ++t) {
      ConnectionMap c = random_connection(rng, split);
      TorsionTensor tt = torsion(c);
      CurvatureTensor rr = curvature(c);
      for (std::size_t i = 0; i < split.m_dim(); ++i)
        for (std::size_t j = 0; j < split.m_dim(); ++j) {
          CHECK(tt.values[i][j] == scale(-1, tt.values[j][i]));
          CHECK(rr.values[i][j] == -rr.values[j][i]);
        }
    }
  }
}

TEST_CASE("equivariance check") {
  ReductiveSplit split = h3_split();  // trivial h: no conditions
  Rng rng(62);
  CHECK(equivariance_check(random_connection(rng, split)).empty());

  ReductiveSplit l5 = l5_split();
  ConnectionMap good = L5Family::corrected({1, 2, 3, 4, 5, 6}, l5);
  CHECK(equivariance_check(good).empty());
  ConnectionMap bad = good;
  bad.maps[0](0, 1) += 1;
  CHECK_FALSE(equivariance_check(bad).empty());
}

TEST_CASE("flat family values and tensors") {
  ConnectionMap c = heisenberg_flat_family(1, {{5}});
  CHECK(c.maps[0].col(1) == Vec{0, 0, 5});  // Lambda(X1)X2 = 5 X3
  CHECK(c.maps[1].col(0) == Vec{0, 0, 4});  // Lambda(X2)X1 = 4 X3
  CHECK(c.maps[2].is_zero());
  CHECK(torsion(c).is_zero());
  CHECK(curvature(c).is_zero());

  ConnectionMap zero_grid = heisenberg_flat_family(1, {{0}});
  CHECK(zero_grid.maps[1].col(0) == Vec{0, 0, -1});
  CHECK(torsion(zero_grid).is_zero());
  CHECK(curvature(zero_grid).is_zero());

  CHECK_THROWS_AS(heisenberg_flat_family(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(heisenberg_flat_family(2, {{1}}), std::invalid_argument);
}

TEST_CASE("flat family entries at p = 2") {
  RationalGrid C = {{2, 3}, {5, 7}};  // row k = 0..p-1, column s-1 = 0..p-1
  ConnectionMap c = heisenberg_flat_family(2, C);
  const ReductiveSplit& split = c.split;
  auto lam_apply = [&](std::size_t gi, std::size_t gj) {
    Vec xi = split.m_coords(unit_vec(5, gi));
    Vec xj = split.m_coords(unit_vec(5, gj));
    return split.ambient_from_m(c.lambda_of(xi).apply(xj));
  };
  Vec x5 = unit_vec(5, 4);
  CHECK(lam_apply(2, 1) == scale(5, x5));  // L(X3)X2 = C[1][0] X5
  CHECK(lam_apply(2, 3) == scale(7, x5));  // L(X3)X4 = C[1][1] X5
  CHECK(lam_apply(0, 3) == scale(3, x5));  // L(X1)X4 = C[0][1] X5
  CHECK(lam_apply(1, 0) == scale(1, x5));  // L(X2)X1 = (C[0][0] - 1) X5
  CHECK(lam_apply(3, 2) == scale(6, x5));  // L(X4)X3 = (C[1][1] - 1) X5
  CHECK(lam_apply(3, 0) == scale(3, x5));  // L(X4)X1 = C[0][1] X5 (off-pair index)
  CHECK(lam_apply(1, 2) == scale(5, x5));  // L(X2)X3 = C[1][0] X5 (off-pair index)
  CHECK(is_zero_vec(lam_apply(4, 0)));     // L(X5) = 0
  CHECK(is_zero_vec(lam_apply(0, 4)));     // L(X1)X5 = 0
  CHECK(is_zero_vec(lam_apply(0, 2)));     // L(odd)(odd) = 0
  CHECK(is_zero_vec(lam_apply(1, 3)));     // L(even)(even) = 0
}

TEST_CASE("flat family stays flat for larger p") {
  Rng rng(63);
  for (std::size_t p : {std::size_t{2}, std::size_t{3}}) {
    Grading g = heisenberg_grading(HeisenbergGradingName::Z22, p);
    for (int t = 0; t < 4; ++t) {
      RationalGrid C(p, std::vector<Rational>(p));
      for (auto& row : C)
        for (auto& e : row) e = rng.rational(5, 3);
      ConnectionMap c = heisenberg_flat_family(p, C);
      CHECK(torsion(c).is_zero());
      CHECK(curvature(c).is_zero());
      CHECK(is_adapted(c, g));
    }
  }
}

TEST_CASE("adapted and homogeneous predicates") {
  Grading g = heisenberg_grading(HeisenbergGradingName::Z22, 1);
  ReductiveSplit split = reductive_split(g);
  ConnectionMap zero = first_canonical(split);
  CHECK(is_adapted(zero, g));
  CHECK(is_homogeneous(zero, g));

  ConnectionMap family = heisenberg_flat_family(1, {{1}});
  CHECK(is_adapted(family, g));
  CHECK_FALSE(is_homogeneous(family, g));

  // Lambda(x in g1) mapping g2 back into g2 breaks adaptedness.
  ConnectionMap crossing = zero;
  crossing.maps[0](1, 1) = 1;
  CHECK_FALSE(is_adapted(crossing, g));
  CHECK_THROWS_AS(is_adapted(zero, heisenberg_grading(HeisenbergGradingName::Z22, 2)),
                  std::invalid_argument);
}

TEST_CASE("torsion-free adapted space") {
  Grading g = heisenberg_grading(HeisenbergGradingName::Z22, 1);
  ConnectionSpace space = torsion_free_adapted_space(g);
  CHECK(space.homogeneous_basis.size() == 3);
  CHECK(torsion(space.particular).is_zero());

  Rng rng(64);
  for (int t = 0; t < 5; ++t) {
    Vec coeffs = {rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2)};
    CHECK(torsion(space.member(coeffs)).is_zero());
    CHECK(space.contains(heisenberg_flat_family(1, {{rng.rational(5, 3)}})));
  }

  // The flat family is strictly inside: generic members have curvature.
  bool found_curved = false;
  for (int t = 0; t < 10 && !found_curved; ++t) {
    Vec coeffs = {rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2)};
    found_curved = !curvature(space.member(coeffs)).is_zero();
  }
  CHECK(found_curved);
}

TEST_CASE("full pattern on an abelian algebra") {
  LieAlgebra ab = abelian_algebra(2);
  Grading trivial(ab, 1, {Subspace::zero(2), Subspace::full(2)});
  ConnectionSpace space = torsion_free_adapted_space(trivial, LambdaPattern::Full);
  CHECK(space.homogeneous_basis.size() == 6);
  for (const auto& m : space.particular.maps) CHECK(m.is_zero());
  for (const auto& member : space.homogeneous_basis)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(member.maps[i].col(j) == member.maps[j].col(i));
}

TEST_CASE("exact enumeration at p = 1") {
  FlatEnumerationReport report = h3_flat_enumeration();
  CHECK(report.family_is_flat);
  CHECK(report.family_is_everything);
  CHECK(report.ok());
  CHECK_FALSE(report.branch_log.empty());
}

TEST_CASE("filiform connection family") {
  ReductiveSplit split = l5_split();
  std::vector<std::array<Rational, 6>> samples = {
      {0, 0, 0, 0, 0, 0}, {2, 0, 0, 0, 0, 0}, {1, -2, 3, Rational(1, 2), -1, 2}};
  L5Report report = l5_scenario(samples);

  CHECK(report.reference_isotropy_sign_flipped);
  CHECK(report.corrected_family_solves_linear_system);

  for (const auto& s : report.samples) {
    CHECK(s.corrected_equivariant);
    CHECK(s.corrected_torsion_free);
    CHECK(s.corrected_curvature_nonzero);
    CHECK(s.reference_curvature_nonzero);
  }
  // The reference matrices agree with the corrected ones exactly when a = 0.
  CHECK(report.samples[0].reference_torsion_free);
  CHECK_FALSE(report.samples[1].reference_torsion_free);
  CHECK_FALSE(report.samples[1].reference_equivariant);

  // Lambda = 0 keeps the isotropy term of the curvature alive.
  CurvatureTensor r = curvature(first_canonical(split));
  CHECK(r.values[0][1] == -isotropy_rep(split, unit_vec(5, 2)));
  CHECK_FALSE(r.is_zero());

  // Curvature vanishing is generic, not universal: the sublocus
  // a = e = 0, b f = 1 is flat, and leaving it restores curvature.
  CHECK(report.flat_member_verified);
  ConnectionMap on_locus = L5Family::corrected({0, 2, 5, -3, 0, Rational(1, 2)}, split);
  CHECK(torsion(on_locus).is_zero());
  CHECK(curvature(on_locus).is_zero());
  ConnectionMap off_locus = L5Family::corrected({0, 2, 5, -3, 0, 1}, split);
  CHECK_FALSE(curvature(off_locus).is_zero());
}
