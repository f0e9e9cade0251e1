#include "heisym/rational.hpp"

namespace heisym {

std::string rational_to_string(const Rational& r) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<Integer> parse_integer(const std::string& s) {
  std::string body = s;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body = body.substr(1);
  }
  if (!all_digits(body)) return std::nullopt;
  Integer value(body);
  if (negative) value = -value;
  return value;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto n = parse_integer(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

bool is_integer_square(const Integer& n) {
  if (n < 0) return false;
  Integer root = sqrt(n);
  return root * root == n;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer num = numerator(r);
  Integer den = denominator(r);
  if (!is_integer_square(num) || !is_integer_square(den)) return std::nullopt;
  return Rational(sqrt(num), sqrt(den));
}

}  // namespace heisym
