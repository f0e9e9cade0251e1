#ifndef HEISYM_GRADING_HPP
#define HEISYM_GRADING_HPP

#include "heisym/lie_algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace heisym {

/// Element of (Z_2)^k encoded as a bitmask: bit i set means eigenvalue -1
/// for the i-th defining involution (bit 0 = first involution). The group
/// product is XOR; label 0 is the identity.
struct GroupLabel {
  unsigned bits = 0;
  unsigned k = 0;

  GroupLabel product(const GroupLabel& other) const { return {bits ^ other.bits, k}; }
  bool is_identity() const { return bits == 0; }
  bool operator==(const GroupLabel&) const = default;
  std::string to_string() const;  // sign tuple, e.g. "(-,+)"
};

/// A (Z_2)^k-grading of a Lie algebra: one subspace per label, labels in
/// canonical bitmask order 0..2^k-1. Zero components are stored explicitly
/// (the identity component may be trivial).
class Grading {
 public:
  Grading(LieAlgebra algebra, unsigned k, std::vector<Subspace> components);

  const LieAlgebra& algebra() const { return algebra_; }
  unsigned k() const { return k_; }
  std::size_t component_count() const { return components_.size(); }
  const Subspace& component(unsigned bits) const { return components_.at(bits); }
  GroupLabel label(unsigned bits) const { return {bits, k_}; }

 private:
  LieAlgebra algebra_;
  unsigned k_;
  std::vector<Subspace> components_;
};

/// Simultaneous eigenspace decomposition of a list of commuting involutive
/// automorphisms: the component at bitmask s is the intersection of the
/// eigenspaces ker(tau_i - s_i I). Throws when a tau fails to be an
/// involutive automorphism or a pair fails to commute.
Grading grading_from_involutions(const LieAlgebra& L, const std::vector<Matrix>& taus);

/// Direct-sum and bracket-compatibility violations; empty means the data is
/// a grading.
std::vector<std::string> check_grading(const Grading& g);

/// Labels with nonzero component, in canonical order.
std::vector<unsigned> support(const Grading& g);

/// True iff the support generates the full group (Z_2)^k.
bool is_irreducible(const Grading& g);

/// omega maps label bits to label bits; it must be a group automorphism of
/// (Z_2)^k (checked). pi must be an automorphism of the algebra (checked).
/// True iff pi(g_{omega(label)}) = gp_label for every label.
bool equivalent_under(const Grading& g, const Grading& gp, const Matrix& pi,
                      const std::vector<unsigned>& omega);

bool is_label_automorphism(const std::vector<unsigned>& omega, unsigned k);

/// Bounded search for an equivalence witness between two gradings of h3:
/// pi runs over the 6-parameter automorphism family with small-height
/// rational entries, omega over the label automorphisms.
std::optional<std::pair<Matrix, std::vector<unsigned>>> find_equivalence_witness_h3(
    const Grading& g, const Grading& gp);

/// Catalog of Heisenberg gradings.
///   H3Z2A        h3 = R{X2} + R{X1,X3}            (k = 1)
///   H3Z2B        h3 = R{X1} + R{X2,X3}            (k = 1)
///   Z2Center     g0 = R{X_{2p+1}},   g1 = R{X_1..X_{2p}}
///   Z2Sub        g0 = R{X_1..X_{2k}, X_{2p+1}}, g1 = rest   (1 <= sub < p)
///   Z2Odd        g0 = odd-index X,   g1 = even-index X + center
///   Z2Even       g0 = even-index X,  g1 = odd-index X + center
///   Z22          {0} + odds + evens + center      (k = 2)
enum class HeisenbergGradingName { H3Z2A, H3Z2B, Z2Center, Z2Sub, Z2Odd, Z2Even, Z22 };

Grading heisenberg_grading(HeisenbergGradingName name, std::size_t p, std::size_t sub = 0);

}  // namespace heisym

#endif
