#ifndef HEISYM_CONNECTION_HPP
#define HEISYM_CONNECTION_HPP

#include "heisym/metrics.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace heisym {

/// Invariant affine connection on a reductive split, encoded as one
/// endomorphism of m per m_basis vector: maps[i] is the matrix of
/// Lambda(Y_i) in m-coordinates.
struct ConnectionMap {
  ReductiveSplit split;
  std::vector<Matrix> maps;

  ConnectionMap(ReductiveSplit s, std::vector<Matrix> lambda_maps);

  /// Lambda extended linearly to an arbitrary element of m (m-coordinates).
  Matrix lambda_of(const Vec& m_coords) const;
};

/// Endomorphism of m sending X to the m-projection of [z, X]; z must lie
/// in h.
Matrix isotropy_rep(const ReductiveSplit& split, const Vec& z_ambient);

/// Violations of Lambda([X,Z]) = [Lambda(X), lambda(Z)] for X over the m
/// basis and Z over the h basis; empty when h = {0}.
std::vector<std::string> equivariance_check(const ConnectionMap& c);

/// T(X,Y) = Lambda(X)Y - Lambda(Y)X - [X,Y]_m on basis pairs, m-coordinates.
struct TorsionTensor {
  std::vector<std::vector<Vec>> values;  // values[i][j]
  bool is_zero() const;
  std::string first_nonzero() const;
};

/// R(X,Y) = [Lambda(X), Lambda(Y)] - Lambda([X,Y]_m) - lambda([X,Y]_h),
/// an endomorphism of m per basis pair.
struct CurvatureTensor {
  std::vector<std::vector<Matrix>> values;
  bool is_zero() const;
  std::string first_nonzero() const;
};

TorsionTensor torsion(const ConnectionMap& c);
CurvatureTensor curvature(const ConnectionMap& c);

/// Lambda = 0: torsion -[X,Y]_m, curvature -lambda([X,Y]_h).
ConnectionMap first_canonical(const ReductiveSplit& split);
/// Lambda(X)Y = [X,Y]_m / 2, torsion-free.
ConnectionMap second_canonical(const ReductiveSplit& split);

/// Lambda(x_a)(g_b) inside g_{ab} for all non-identity labels a, b.
bool is_adapted(const ConnectionMap& c, const Grading& g);
/// Every component of m invariant under every Lambda(Y_i).
bool is_homogeneous(const ConnectionMap& c, const Grading& g);

using RationalGrid = std::vector<std::vector<Rational>>;

/// The flat torsion-free adapted family on heisenberg(p) with its
/// (Z_2)^2-grading: C is a p x p grid, row k = 0..p-1, column s = 1..p;
///   Lambda(X_{2k+1}) X_{2s}  = C[k][s-1] X_{2p+1}
///   Lambda(X_{2s}) X_{2k+1}  = C[k][s-1] X_{2p+1}      (k != s-1)
///   Lambda(X_{2s}) X_{2s-1}  = (C[s-1][s-1] - 1) X_{2p+1}
/// and every other value zero, including Lambda(X_{2p+1}) = 0.
ConnectionMap heisenberg_flat_family(std::size_t p, const RationalGrid& C);

enum class LambdaPattern { Adapted, Full };

struct ConnectionSpace {
  ConnectionMap particular;
  std::vector<ConnectionMap> homogeneous_basis;

  /// particular + sum coeff[i] * basis[i].
  ConnectionMap member(const Vec& coeffs) const;
  bool contains(const ConnectionMap& c) const;
};

/// Treats the Lambda entries allowed by the pattern as unknowns (for
/// Adapted: blocks g_a -> g_{ab} per label pair, including the blocks on
/// the center component; for Full: everything) and solves T = 0 exactly.
ConnectionSpace torsion_free_adapted_space(const Grading& g,
                                           LambdaPattern pattern = LambdaPattern::Adapted);

/// Exact elimination result for the quadratic system {T = 0, R = 0} over
/// the adapted pattern on heisenberg(1).
struct FlatEnumerationReport {
  bool family_is_flat = false;   // the one-parameter family solves both tensors
  bool family_is_everything = false;  // every branch forces the extra parameters to 0
  std::vector<std::string> branch_log;
  std::string family_description;
  bool ok() const { return family_is_flat && family_is_everything; }
};

FlatEnumerationReport h3_flat_enumeration();

/// The five-dimensional filiform example: the six-parameter connection
/// family on l5 with h = span{X3, X5}, m = span{X1, X2, X4}. Two sign
/// readings of the family are in circulation; `corrected` differs from
/// `reference` in two entries and is the one solving the torsion-free plus
/// equivariance system under the bracket-convention isotropy.
struct L5Family {
  // Parameters (a, b, c, d, e, f).
  static ConnectionMap reference(const std::array<Rational, 6>& p, const ReductiveSplit& split);
  static ConnectionMap corrected(const std::array<Rational, 6>& p, const ReductiveSplit& split);
};

struct L5SampleResult {
  std::array<Rational, 6> params;
  bool reference_equivariant = false;
  bool reference_torsion_free = false;
  bool corrected_equivariant = false;
  bool corrected_torsion_free = false;
  bool reference_curvature_nonzero = false;
  bool corrected_curvature_nonzero = false;
  std::string curvature_witness;
};

struct L5Report {
  ReductiveSplit split;
  bool reference_isotropy_sign_flipped = false;  // bracket convention gives X1 -> -X4
  bool corrected_family_solves_linear_system = false;
  /// The non-vanishing of the curvature is generic, not universal: on the
  /// sublocus a = e = 0, b f = 1 the commutator of Lambda(X1) and
  /// Lambda(X2) cancels the isotropy term exactly. This member is verified
  /// equivariant, torsion-free and flat.
  bool flat_member_verified = false;
  std::vector<L5SampleResult> samples;
};

L5Report l5_scenario(const std::vector<std::array<Rational, 6>>& samples);

}  // namespace heisym

#endif
