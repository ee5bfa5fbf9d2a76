#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace carmen {

// splitmix64; used to derive independent per-index seed streams so sampled
// results do not depend on how work is partitioned.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Seeded generator with fully pinned algorithms (mt19937_64 plus rejection
// sampling), so identical seeds reproduce identical draws everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return r % bound;
  }

  int bit() { return static_cast<int>(eng_() >> 63); }

  // Fisher-Yates over 1..n.
  std::vector<int> permutation(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (int i = n - 1; i > 0; --i) {
      const auto j = static_cast<int>(bounded(static_cast<std::uint64_t>(i) + 1));
      std::swap(v[i], v[j]);
    }
    return v;
  }

  // k distinct values from [0, universe), ascending.
  std::vector<std::uint32_t> subset(std::uint32_t universe, std::uint32_t k) {
    std::vector<std::uint32_t> pool(universe);
    for (std::uint32_t i = 0; i < universe; ++i) pool[i] = i;
    for (std::uint32_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::uint32_t>(bounded(universe - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace carmen
