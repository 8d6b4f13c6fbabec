#pragma once

#include <dicritical/numeric.hpp>

#include <cstdint>
#include <random>

namespace dicritical {

/// Seeded generator for "generic" constants. The engine is std::mt19937_64,
/// whose output sequence is fixed by the standard; the mapping to integers and
/// rationals is done here (not through std distributions) so that every
/// platform draws the same values for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  /// Independent stream for a labelled sub-task.
  Rng stream(std::uint64_t label) const { return Rng(mix(seed_base() ^ mix(label + 0x9e3779b97f4a7c15ULL))); }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi] by rejection sampling.
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  long nonzero_integer(long bound) {
    long v;
    do v = integer(-bound, bound);
    while (v == 0);
    return v;
  }

  /// Nonzero rational p/q with |p| <= 50, 1 <= q <= 9.
  Rational rational() {
    long p = nonzero_integer(50);
    long q = integer(1, 9);
    return make_rational(p, q);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
  }
  std::uint64_t seed_base() const {
    std::mt19937_64 copy = engine_;
    return copy();
  }

  std::mt19937_64 engine_;
};

}  // namespace dicritical
