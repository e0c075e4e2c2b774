#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace locbox {

// Splitmix64 generator. All randomness in the project flows from one root
// seed through derive_seed(), so full runs and partial reruns produce
// bit-identical streams on any platform (no libstdc++ distribution objects).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Integer in [lo, hi] inclusive. Modulo bias is irrelevant at our ranges.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Box-Muller, cosine branch only. Two uniforms per draw keeps the stream
  // stateless between calls.
  double next_gaussian() {
    double u1 = 1.0 - next_double();
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  SplitMix64 split() { return SplitMix64(next_u64()); }

 private:
  std::uint64_t state_;
};

// Per-purpose seed derivation: FNV-1a of the tag folded into the root seed,
// then scrambled once. Tags are short strings like "scene", "oracle/maps".
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return SplitMix64(root ^ h).next_u64();
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view tag, std::uint64_t index) {
  return SplitMix64(derive_seed(root, tag) ^ (index * 0x9e3779b97f4a7c15ull)).next_u64();
}

}  // namespace locbox
