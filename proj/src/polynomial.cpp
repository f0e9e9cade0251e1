#include "heisym/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace heisym {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0));
}

std::optional<Rational> Poly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Poly Poly::operator+(const Poly& other) const {
  Poly r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& other) const {
  Poly r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& other) const {
  Poly r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff * c;
  return r;
}

Poly Poly::operator-() const { return (*this) * Rational(-1); }

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned sum = 0;
    for (unsigned e : m) sum += e;
    d = std::max(d, sum);
  }
  return d;
}

Poly Poly::substitute(std::size_t var, const Rational& value) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Rational scaled = c;
    for (unsigned e = 0; e < m[var]; ++e) scaled *= value;
    Monomial reduced = m;
    reduced[var] = 0;
    r.add_term(reduced, scaled);
  }
  return r;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    reduced[var] = 0;
    Poly term(nvars_);
    term.add_term(reduced, c);
    for (unsigned e = 0; e < m[var]; ++e) term = term * value;
    r = r + term;
  }
  return r;
}

Poly::Monomial Poly::monomial_gcd() const {
  if (terms_.empty()) return Monomial(nvars_, 0);
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) g[i] = std::min(g[i], m[i]);
  return g;
}

Poly Poly::shift_down(const Monomial& m) const {
  Poly r(nvars_);
  for (const auto& [mono, c] : terms_) {
    Monomial reduced(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (mono[i] < m[i]) throw std::invalid_argument("monomial does not divide all terms");
      reduced[i] = mono[i] - m[i];
    }
    r.add_term(reduced, c);
  }
  return r;
}

std::optional<std::pair<std::size_t, Rational>> Poly::linear_root() const {
  if (total_degree() != 1) return std::nullopt;
  std::size_t var = nvars_;
  Rational slope = 0, offset = 0;
  for (const auto& [m, c] : terms_) {
    std::size_t active = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i] > 0) active = i;
    if (active == nvars_) {
      offset = c;
    } else {
      if (var != nvars_ && var != active) return std::nullopt;  // two variables
      var = active;
      slope = c;
    }
  }
  if (var == nvars_ || slope == 0) return std::nullopt;
  return std::make_pair(var, -offset / slope);
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << rational_to_string(c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) out << "*" << names.at(i);
  }
  return out.str();
}

}  // namespace heisym
