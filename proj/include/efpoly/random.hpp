#pragma once

#include <cstdint>
#include <random>

#include "efpoly/rational.hpp"

namespace efpoly {

/// Deterministic generator for test instances. std::mt19937_64 output is
/// fully specified by the standard; the distributions here are written out
/// by hand so the same seed yields the same instances on every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi] (modulo reduction, bias is irrelevant here).
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  bool coin() { return (engine_() & 1U) != 0; }

  /// Rational with numerator in [lo*den, hi*den] and denominator in [1, max_den].
  Rational rational(long lo, long hi, long max_den = 1) {
    const long den = integer(1, max_den);
    return Rational(integer(lo * den, hi * den), den);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace efpoly
