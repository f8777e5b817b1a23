#pragma once

#include <cstdint>
#include <random>

namespace riabc {

// SplitMix64 step. Used as a stream generator and as a finalizing mixer when
// deriving independent sub-seeds from (seed, tag...) tuples.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t mix64(uint64_t x) {
  uint64_t s = x;
  return splitmix64(s);
}

// Order-sensitive seed derivation: derive_seed(s, a, b) != derive_seed(s, b, a).
template <typename... Tags>
inline uint64_t derive_seed(uint64_t seed, Tags... tags) {
  uint64_t acc = mix64(seed);
  ((acc = mix64(acc ^ (0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(tags)))), ...);
  return acc;
}

// 53-bit mapping to [0,1). std::uniform_real_distribution is
// implementation-defined, so traces would not be reproducible across
// standard libraries; this mapping is pinned.
inline double to_unit_double(uint64_t x) { return (x >> 11) * 0x1.0p-53; }

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform over [lo, hi).
  double uniform(double lo, double hi) {
    return lo + to_unit_double(next_u64()) * (hi - lo);
  }

  // Uniform index in [0, n). Fixed-point reduction, no rejection loop.
  uint64_t below(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace riabc
