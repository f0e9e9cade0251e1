#ifndef HEISYM_LINALG_HPP
#define HEISYM_LINALG_HPP

#include "heisym/matrix.hpp"

#include <optional>
#include <string>

namespace heisym {

/// Reduced row-echelon form. Row space is preserved; pivots are 1 and are
/// the only nonzero entries of their columns.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Rational subspace of Q^n held in canonical form: the basis rows are the
/// nonzero rows of a reduced row-echelon matrix, so two subspaces are equal
/// iff their basis matrices are identical.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  /// Rows of m span the subspace; ambient dimension is m.cols().
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  /// dim() x ambient_dim() matrix in reduced row-echelon form.
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const = default;

  std::string to_string() const;

 private:
  Subspace(std::size_t ambient_dim, Matrix canonical_basis)
      : ambient_dim_(ambient_dim), basis_(std::move(canonical_basis)) {}

  std::size_t ambient_dim_ = 0;
  Matrix basis_;  // canonical RREF rows, no zero rows
};

/// Null space {v : m v = 0}.
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace subspace_sum(const Subspace& u, const Subspace& v);

struct AffineSolution {
  Vec particular;
  Subspace homogeneous;
};

/// Solves a x = b exactly. Empty result means the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vec& b);

struct CongruenceResult {
  Matrix d;  // diagonal
  Matrix p;  // invertible, d == p^T s p
};

/// Diagonalizes a symmetric matrix by congruence, exactly. Zero diagonal
/// pivots are repaired by adding a suitable row and column.
CongruenceResult congruence_diagonalize(const Matrix& s);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;

  bool operator==(const Signature&) const = default;
  std::string to_string() const;
};

/// Sylvester inertia counts of a symmetric matrix.
Signature signature(const Matrix& s);

}  // namespace heisym

#endif
