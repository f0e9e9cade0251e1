#ifndef HEISYM_POLYNOMIAL_HPP
#define HEISYM_POLYNOMIAL_HPP

#include "heisym/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace heisym {

/// Sparse multivariate polynomial over the rationals. Just enough algebra
/// for small exact eliminations: ring operations, substitution, and
/// monomial factor extraction.
class Poly {
 public:
  using Monomial = std::vector<unsigned>;  // exponent per variable

  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;  // empty unless constant

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rational& c) const;
  Poly operator-() const;
  bool operator==(const Poly& other) const = default;

  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;

  Poly substitute(std::size_t var, const Rational& value) const;
  Poly substitute(std::size_t var, const Poly& value) const;

  /// Componentwise minimum of all exponent vectors (the monomial gcd).
  Monomial monomial_gcd() const;
  Poly shift_down(const Monomial& m) const;  // divide by a monomial dividing all terms

  /// If the polynomial is c*x_i + d with c != 0 (a univariate linear form),
  /// returns (i, root -d/c).
  std::optional<std::pair<std::size_t, Rational>> linear_root() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace heisym

#endif
