#ifndef HEISYM_AUT_H3_HPP
#define HEISYM_AUT_H3_HPP

#include "heisym/lie_algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace heisym {

/// Parameters of the 6-parameter automorphism family of the 3-dimensional
/// Heisenberg algebra. The matrix is
///   [ a1 a2 0 ]
///   [ a3 a4 0 ]
///   [ a5 a6 D ]   with D = a1 a4 - a2 a3 != 0.
struct AutParams {
  Rational a1, a2, a3, a4, a5, a6;
  Rational delta() const { return a1 * a4 - a2 * a3; }
};

/// Throws std::invalid_argument when delta vanishes.
Matrix aut_matrix(const AutParams& p);

enum class InvolutionFamily { Identity, Tau1, Tau2, Tau3, Tau4 };
std::string family_name(InvolutionFamily f);

/// A classified involutive automorphism: family plus its free parameters.
struct InvolutionTag {
  InvolutionFamily family = InvolutionFamily::Identity;
  std::vector<Rational> params;

  static InvolutionTag identity() { return {InvolutionFamily::Identity, {}}; }
  static InvolutionTag tau1(Rational a3, Rational a6);
  static InvolutionTag tau2(Rational a3, Rational a5);
  static InvolutionTag tau3(Rational a1, Rational a2, Rational a6);  // needs a2 != 0
  static InvolutionTag tau4(Rational a5, Rational a6);

  bool operator==(const InvolutionTag&) const = default;
  std::string to_string() const;
};

/// Matrix of the tagged involution. Every output squares to the identity.
Matrix tau(const InvolutionTag& tag);

/// Identifies the unique family of an involutive automorphism of h3 and
/// recovers its parameters; throws if the input is not an involutive
/// automorphism. Families are tested in the order Identity, Tau4, Tau1,
/// Tau2, Tau3 so tags are deterministic.
InvolutionTag classify_involution(const Matrix& m);

Matrix compose(const Matrix& m1, const Matrix& m2);

/// A finite group of matrices with its multiplication table.
/// elements[0] is the identity.
class FiniteGroupTable {
 public:
  FiniteGroupTable(std::vector<Matrix> elements);

  const std::vector<Matrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t product_index(std::size_t i, std::size_t j) const { return table_[i][j]; }

  bool is_abelian() const;
  std::size_t element_order(std::size_t i) const;
  /// Largest element order.
  std::size_t exponent() const;
  std::optional<std::size_t> index_of(const Matrix& m) const;
  bool same_element_set(const FiniteGroupTable& other) const;

 private:
  std::vector<Matrix> elements_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Closes the generated set under composition, starting from the identity.
/// Throws std::runtime_error when the closure exceeds bound.
FiniteGroupTable group_closure(const std::vector<Matrix>& generators, std::size_t bound);

/// The Klein four-group {Id, tau1(a3,a6), tau2(-a3,a5), tau4(-a3*a6/2-a5, -a6)}.
FiniteGroupTable gamma7(const Rational& a3, const Rational& a5, const Rational& a6);

/// The Klein four-group built from tau3(a1,a2,a6), tau3(-a1,-a2,a6p) and
/// their product. Requires a2 != 0.
FiniteGroupTable gamma8(const Rational& a1, const Rational& a2, const Rational& a6,
                        const Rational& a6p);

/// True iff {sigma^-1 m sigma : m in g} equals h as a set.
bool conjugates_to(const Matrix& sigma, const FiniteGroupTable& g, const FiniteGroupTable& h);

/// Automorphism of h3 of multiplicative order exactly k, when one exists
/// with rational entries: k must be one of 3, 4, 6 (rational cos(2*pi/k))
/// and cos^2(2*pi/k) - 1 - a2*a3 must be a rational square. The principal
/// square root r gives the diagonal pair (cos - r, cos + r).
std::optional<Matrix> order_k_instance(std::size_t k, const Rational& a2, const Rational& a3,
                                       const Rational& a5, const Rational& a6);

/// Generators of the order-6 non-abelian subgroup: an involution and an
/// order-3 element with sigma1 sigma2 sigma1 = sigma2^2.
Matrix sigma3_example_sigma1();
Matrix sigma3_example_sigma2(const Rational& alpha);  // alpha != 0

struct ConjugacyWitness {
  Matrix sigma;
  std::array<Rational, 4> gamma8_params;  // (a1, a2, a6, a6p)
};

/// Searches the automorphism family over small-height rationals for a sigma
/// with sigma^-1 gamma7(a3,a5,a6) sigma = gamma8(...); the returned witness
/// is verified exactly before being reported.
std::optional<ConjugacyWitness> find_gamma7_gamma8_witness(const Rational& a3,
                                                           const Rational& a5,
                                                           const Rational& a6);

}  // namespace heisym

#endif
