#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace streamdesc {

// SplitMix64 finalizer. Bijective on 64-bit values, so distinct inputs give
// distinct outputs; used everywhere a seed has to be derived from another.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Salts keep the seed streams for different purposes disjoint.
inline constexpr std::uint64_t kGraphSeedSalt = 0x67726170686d6978ULL;
inline constexpr std::uint64_t kWorkerSeedSalt = 0x776f726b65726d78ULL;
inline constexpr std::uint64_t kSplitSeedSalt = 0x73706c69746d6978ULL;
inline constexpr std::uint64_t kEstimateSeedSalt = 0x657374696d617465ULL;

// Derived seeds are pairwise distinct across `index` for a fixed (base, salt)
// because splitmix64 is a bijection applied to distinct arguments.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt,
                              std::uint64_t index) {
  return splitmix64(splitmix64(base ^ salt) + index);
}

// mt19937_64 with hand-rolled bounded draws. The engine itself is pinned by
// the standard; the std distributions are not, and reproducibility here must
// not depend on the standard library build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Fisher-Yates, driven by below() so the permutation is pinned.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace streamdesc
