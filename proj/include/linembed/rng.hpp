#pragma once

#include <cstdint>
#include <random>

namespace linembed {

// Stream-split seeding: every consumer derives its own mt19937_64 from
// (seed, tag[, index]) through splitmix64, so adding a consumer or
// parallelizing one never shifts another stream. mt19937_64 and the
// explicit 53-bit uniform below are fully specified, making sampled
// outputs reproducible across platforms.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag));
}
inline uint64_t mix_seed(uint64_t seed, uint64_t tag, uint64_t index) {
  return splitmix64(mix_seed(seed, tag) ^ splitmix64(index + 0x9e3779b9ULL));
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  uint64_t next_u64() { return gen_(); }
  // Uniform in [0,1) with exactly 53 random bits.
  double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }
  // Uniform integer in [0, m) by rejection (unbiased, portable).
  uint64_t below(uint64_t m) {
    if (m == 0) return 0;
    uint64_t lim = UINT64_MAX - UINT64_MAX % m;
    uint64_t x;
    do {
      x = gen_();
    } while (x >= lim);
    return x % m;
  }
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 gen_;
};

// Stream tags (arbitrary distinct constants).
inline constexpr uint64_t kStreamLatents = 0x4c415445ULL;
inline constexpr uint64_t kStreamEdges = 0x45444745ULL;
inline constexpr uint64_t kStreamSubsets = 0x53554253ULL;
inline constexpr uint64_t kStreamOrders = 0x4f524452ULL;
inline constexpr uint64_t kStreamCut = 0x43555421ULL;

}  // namespace linembed
