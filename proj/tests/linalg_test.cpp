#include "heisym/linalg.hpp"
#include "heisym/rng.hpp"

#include <doctest.h>

using namespace heisym;

namespace {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(5, 3);
  return m;
}

Matrix random_symmetric(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.rational(5, 3);
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

Subspace random_subspace(Rng& rng, std::size_t ambient) {
  std::size_t count = static_cast<std::size_t>(rng.int_in(0, ambient));
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < count; ++i) {
    Vec v(ambient);
    for (auto& x : v) x = rng.rational(3, 2);
    rows.push_back(std::move(v));
  }
  return Subspace::span(ambient, rows);
}

}  // namespace

TEST_CASE("rref on the worked examples") {
  CHECK(rref(Matrix{{2, 4}, {1, 2}}) == Matrix{{1, 2}, {0, 0}});
  CHECK(rref(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(rref(Matrix{{0, 1}, {1, 0}}) == Matrix::identity(2));
}

TEST_CASE("rref is idempotent") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 5);
    Matrix r = rref(m);
    CHECK(rref(r) == r);
  }
}

TEST_CASE("kernel on the worked examples") {
  CHECK(kernel(Matrix::zero(2, 2)) == Subspace::full(2));
  CHECK(kernel(Matrix::identity(3)) == Subspace::zero(3));
  Subspace expected = Subspace::span(3, {{-2, 1, 0}, {-3, 0, 1}});
  CHECK(kernel(Matrix{{1, 2, 3}}) == expected);
}

TEST_CASE("rank-nullity") {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    Matrix m = random_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5);
    CHECK(kernel(m).dim() + rank(m) == m.cols());
  }
}

TEST_CASE("solve_affine on the worked examples") {
  auto s1 = solve_affine(Matrix::identity(2), {3, 4});
  REQUIRE(s1);
  CHECK(s1->particular == Vec{3, 4});
  CHECK(s1->homogeneous == Subspace::zero(2));

  auto s2 = solve_affine(Matrix{{1, 1}}, {0});
  REQUIRE(s2);
  CHECK(s2->particular == Vec{0, 0});
  CHECK(s2->homogeneous == Subspace::span(2, {{-1, 1}}));

  CHECK_FALSE(solve_affine(Matrix{{0, 0}}, {1}));
}

TEST_CASE("solve_affine solutions re-substitute") {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    Matrix a = random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 4);
    Vec x(a.cols());
    for (auto& v : x) v = rng.rational(4, 3);
    Vec b = a.apply(x);  // consistent by construction
    auto sol = solve_affine(a, b);
    REQUIRE(sol);
    CHECK(a.apply(sol->particular) == b);
    for (std::size_t r = 0; r < sol->homogeneous.dim(); ++r)
      CHECK(is_zero_vec(a.apply(sol->homogeneous.basis().row(r))));
  }
}

TEST_CASE("intersect on the worked examples") {
  Subspace u = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  Subspace v = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(intersect(u, v) == Subspace::span(3, {{0, 1, 0}}));
  CHECK(intersect(u, u) == u);
  CHECK(intersect(Subspace::span(3, {{1, 0, 0}}), Subspace::span(3, {{0, 1, 0}})) ==
        Subspace::zero(3));
  CHECK_THROWS_AS(intersect(Subspace::full(2), Subspace::full(3)), std::invalid_argument);
}

TEST_CASE("subspace lattice laws") {
  Rng rng(14);
  for (int t = 0; t < 60; ++t) {
    std::size_t ambient = 2 + t % 4;
    Subspace u = random_subspace(rng, ambient);
    Subspace v = random_subspace(rng, ambient);
    Subspace w = random_subspace(rng, ambient);
    CHECK(intersect(u, v) == intersect(v, u));
    CHECK(intersect(u, u) == u);
    CHECK(intersect(intersect(u, v), w) == intersect(u, intersect(v, w)));
    CHECK(u.contains(intersect(u, v)));
    CHECK(subspace_sum(u, v).contains(u));
  }
}

TEST_CASE("congruence diagonalization on the worked examples") {
  auto id3 = congruence_diagonalize(Matrix::identity(3));
  CHECK(id3.d == Matrix::identity(3));
  CHECK(id3.p == Matrix::identity(3));

  auto hyp = congruence_diagonalize(Matrix{{0, 1}, {1, 0}});
  CHECK(hyp.d.is_symmetric());
  CHECK(((hyp.d(0, 0) > 0 && hyp.d(1, 1) < 0) || (hyp.d(0, 0) < 0 && hyp.d(1, 1) > 0)));
  CHECK(hyp.p.transpose() * Matrix{{0, 1}, {1, 0}} * hyp.p == hyp.d);

  Matrix already = Matrix::diagonal({1, -1, 0});
  auto res = congruence_diagonalize(already);
  CHECK(res.d == already);
  CHECK(res.p == Matrix::identity(3));

  CHECK_THROWS_AS(congruence_diagonalize(Matrix{{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("congruence result is consistent") {
  Rng rng(15);
  for (int t = 0; t < 40; ++t) {
    Matrix s = random_symmetric(rng, 1 + t % 4);
    auto res = congruence_diagonalize(s);
    CHECK(res.p.transpose() * s * res.p == res.d);
    for (std::size_t i = 0; i < res.d.rows(); ++i)
      for (std::size_t j = 0; j < res.d.cols(); ++j)
        if (i != j) CHECK(res.d(i, j) == 0);
    CHECK(rank(res.p) == res.p.rows());
  }
}

TEST_CASE("signature on the worked examples") {
  CHECK(signature(Matrix::identity(3)) == Signature{3, 0, 0});
  CHECK(signature(Matrix{{1, 0, 0}, {0, -1, 1}, {0, 1, 0}}) == Signature{2, 1, 0});
  CHECK(signature(Matrix::zero(2, 2)) == Signature{0, 0, 2});
}

TEST_CASE("signature is a congruence invariant") {
  Rng rng(16);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + t % 3;
    Matrix s = random_symmetric(rng, n);
    Matrix p = random_invertible(rng, n);
    CHECK(signature(p.transpose() * s * p) == signature(s));
  }
}

TEST_CASE("inverse") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_invertible(rng, 2 + t % 3);
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(m.rows()));
  }
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST_CASE("subspace canonical form makes equality structural") {
  Subspace a = Subspace::span(3, {{2, 4, 0}, {0, 0, 5}});
  Subspace b = Subspace::span(3, {{1, 2, 1}, {0, 0, -1}});
  CHECK(a == b);
  CHECK(a.contains(Vec{3, 6, 7}));
  CHECK_FALSE(a.contains(Vec{0, 1, 0}));
}
