#pragma once

#include <cstdint>

#include "forge/algebroid.hpp"

namespace forge {

// Small deterministic PRNG (SplitMix64).  The test suites and the CLI must
// produce identical sample streams on every platform, so no <random> engines
// or distributions are used anywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // Small rational: numerator in [-4, 4] \ {0}, denominator in {1, 2, 3}.
  Rational small_rational() {
    long num = static_cast<long>(below(8)) - 4;
    if (num >= 0) ++num;
    long den = static_cast<long>(below(3)) + 1;
    return Rational(num) / Rational(den);
  }

private:
  std::uint64_t state_;
};

// Random Laurent polynomial: at most `terms` terms, each variable exponent in
// [-2, 2] when inverted and [0, 2] otherwise, total degree clamped to <= 2.
LaurentPoly random_poly(Rng& rng, const RingPtr& ring, int terms = 3);

// Random element: random polynomial coefficients on frame and kernel slots and
// (for Courant/vertex) a random 1-form part.
AlgebroidElement random_element(Rng& rng, const StructurePtr& s);

} // namespace forge
