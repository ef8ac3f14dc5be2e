#pragma once

#include <cstdint>
#include <random>

namespace locmat {

// Seeded pseudo-random stream for the verification suites. Distributions
// are hand-rolled on top of the raw mt19937_64 output so that a fixed seed
// yields the same sequence on every platform and standard library.
class rng {
 public:
  explicit rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform value in [0, bound), bound >= 1. Rejection sampling keeps the
  // stream unbiased and reproducible.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform value in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (gen_() & 1u) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace locmat
