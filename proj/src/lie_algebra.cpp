#include "heisym/lie_algebra.hpp"

#include <stdexcept>

namespace heisym {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::vector<Vec>> structure)
    : name_(std::move(name)), dim_(structure.size()), structure_(std::move(structure)) {
  for (const auto& row : structure_) {
    if (row.size() != dim_) throw std::invalid_argument("structure tensor is not cubic");
    for (const auto& entry : row)
      if (entry.size() != dim_) throw std::invalid_argument("structure tensor is not cubic");
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (structure_[i][j][k] != -structure_[j][i][k])
          throw std::invalid_argument("structure constants are not antisymmetric");
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("vector length mismatch");
  Vec result = zero_vec(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational c = x[i] * y[j];
      const Vec& base = structure_[i][j];
      for (std::size_t k = 0; k < dim_; ++k) result[k] += c * base[k];
    }
  }
  return result;
}

std::vector<LieAlgebra::JacobiViolation> LieAlgebra::check_jacobi() const {
  std::vector<JacobiViolation> violations;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vec sum = bracket(structure_[i][j], unit_vec(dim_, k));
        sum = add(sum, bracket(structure_[j][k], unit_vec(dim_, i)));
        sum = add(sum, bracket(structure_[k][i], unit_vec(dim_, j)));
        if (!is_zero_vec(sum)) violations.push_back({i, j, k});
      }
  return violations;
}

bool LieAlgebra::is_automorphism(const Matrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return false;
  if (rank(m) != dim_) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Vec lhs = m.apply(structure_[i][j]);
      Vec rhs = bracket(m.col(i), m.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_) throw std::invalid_argument("vector length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec img = bracket(x, unit_vec(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = img[k];
  }
  return m;
}

Subspace LieAlgebra::center() const {
  // x is central iff bracket(x, e_j) = 0 for every j; each j contributes a
  // dim x dim linear block in x.
  Matrix stacked(0, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Matrix block(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) block(k, i) = structure_[i][j][k];
    stacked = stacked.vstack(block);
  }
  return kernel(stacked);
}

Subspace LieAlgebra::derived_subalgebra() const {
  std::vector<Vec> spans;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!is_zero_vec(structure_[i][j])) spans.push_back(structure_[i][j]);
  return Subspace::span(dim_, spans);
}

LieAlgebra algebra_from_brackets(std::string name, std::size_t dim,
                                 const std::vector<BracketEntry>& entries) {
  std::vector<std::vector<Vec>> structure(dim, std::vector<Vec>(dim, zero_vec(dim)));
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.i == e.j)
      throw std::invalid_argument("bracket entry index out of range");
    for (const auto& [k, c] : e.coeffs) {
      if (k >= dim) throw std::invalid_argument("bracket coefficient index out of range");
      structure[e.i][e.j][k] += c;
      structure[e.j][e.i][k] -= c;
    }
  }
  return LieAlgebra(std::move(name), std::move(structure));
}

LieAlgebra heisenberg(std::size_t p) {
  if (p == 0) throw std::invalid_argument("heisenberg needs p >= 1");
  std::size_t n = 2 * p + 1;
  std::vector<BracketEntry> entries;
  for (std::size_t s = 1; s <= p; ++s)
    entries.push_back({2 * s - 2, 2 * s - 1, {{n - 1, Rational(1)}}});
  return algebra_from_brackets("heisenberg(p=" + std::to_string(p) + ")", n, entries);
}

LieAlgebra filiform_l5() {
  std::vector<BracketEntry> entries;
  for (std::size_t i = 1; i <= 3; ++i)
    entries.push_back({0, i, {{i + 1, Rational(1)}}});
  return algebra_from_brackets("l5", 5, entries);
}

LieAlgebra abelian_algebra(std::size_t n) {
  return algebra_from_brackets("abelian(" + std::to_string(n) + ")", n, {});
}

}  // namespace heisym
