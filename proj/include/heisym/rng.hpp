#ifndef HEISYM_RNG_HPP
#define HEISYM_RNG_HPP

#include "heisym/rational.hpp"

#include <cstdint>

namespace heisym {

/// Deterministic splitmix64 generator. Sequences are identical on every
/// platform for a given seed, which keeps reports byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; the slight modulo bias is irrelevant
  /// for test sampling.
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small-height rational: numerator in [-num_bound, num_bound],
  /// denominator in [1, den_bound].
  Rational rational(long long num_bound = 9, long long den_bound = 9) {
    return Rational(int_in(-num_bound, num_bound), int_in(1, den_bound));
  }

  Rational nonzero_rational(long long num_bound = 9, long long den_bound = 9) {
    while (true) {
      Rational r = rational(num_bound, den_bound);
      if (r != 0) return r;
    }
  }

  Rational positive_rational(long long num_bound = 9, long long den_bound = 9) {
    return Rational(int_in(1, num_bound), int_in(1, den_bound));
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026ull;

}  // namespace heisym

#endif
