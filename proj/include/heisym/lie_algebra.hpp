#ifndef HEISYM_LIE_ALGEBRA_HPP
#define HEISYM_LIE_ALGEBRA_HPP

#include "heisym/linalg.hpp"

#include <string>
#include <vector>

namespace heisym {

/// Finite-dimensional Lie algebra given by exact rational structure
/// constants in a fixed ordered basis X_1..X_n: [X_i, X_j] = sum_k c[i][j][k] X_k.
/// The tensor is stored fully; antisymmetry is validated at construction.
class LieAlgebra {
 public:
  /// structure[i][j] holds the coordinates of [X_i, X_j]. Throws if the
  /// tensor is not antisymmetric or has the wrong shape.
  LieAlgebra(std::string name, std::vector<std::vector<Vec>> structure);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }

  const Vec& basis_bracket(std::size_t i, std::size_t j) const { return structure_[i][j]; }
  Vec bracket(const Vec& x, const Vec& y) const;

  struct JacobiViolation {
    std::size_t i, j, k;
  };
  /// All basis triples violating the Jacobi identity; empty means the tensor
  /// defines a Lie algebra.
  std::vector<JacobiViolation> check_jacobi() const;

  /// True iff m is invertible and preserves all basis brackets.
  bool is_automorphism(const Matrix& m) const;

  /// Matrix of y -> [x, y].
  Matrix ad(const Vec& x) const;

  Subspace center() const;
  Subspace derived_subalgebra() const;

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<std::vector<Vec>> structure_;
};

/// Sparse builder: entries give [X_i, X_j] for i < j (0-based); everything
/// else is zero or follows by antisymmetry.
struct BracketEntry {
  std::size_t i, j;
  std::vector<std::pair<std::size_t, Rational>> coeffs;
};
LieAlgebra algebra_from_brackets(std::string name, std::size_t dim,
                                 const std::vector<BracketEntry>& entries);

/// The (2p+1)-dimensional Heisenberg algebra: [X_{2s-1}, X_{2s}] = X_{2p+1}
/// for s = 1..p, with X_{2p+1} central. Throws for p = 0.
LieAlgebra heisenberg(std::size_t p);

/// Five-dimensional filiform algebra with [X_1, X_i] = X_{i+1}, i = 2,3,4.
LieAlgebra filiform_l5();

LieAlgebra abelian_algebra(std::size_t n);

}  // namespace heisym

#endif
