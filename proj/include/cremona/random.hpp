#pragma once

#include <cstdint>
#include <random>

#include "cremona/scalar.hpp"

namespace cremona {

// Seeded generator with a platform-independent integer mapping
// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  // Rational with numerator in [-height, height] and denominator in [1, height].
  Rational rational(std::int64_t height) {
    Rational q(static_cast<long>(uniform(-height, height)), static_cast<unsigned long>(uniform(1, height)));
    q.canonicalize();
    return q;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cremona
