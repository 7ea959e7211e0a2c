#pragma once

#include <cstdint>
#include <random>

namespace ncsg {

// Seeded source of randomness injected into every sampling operation.
// Bounded draws use rejection sampling on top of mt19937_64 so that a seed
// reproduces the same sequence on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % bound;
  }

  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  bool bit() { return (engine_() >> 63) != 0; }

  // Independent child stream, e.g. one per protocol party.
  Rng fork(std::uint64_t stream) {
    return Rng(engine_() ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ncsg
