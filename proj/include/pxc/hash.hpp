#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace pxc {

// 64-bit FNV-1a over raw bytes. Fixed constants, byte-order independent, so
// feature indices, dataset fingerprints, and model checksums are stable
// across platforms.
inline constexpr uint64_t kFnvOffsetBasis = 14695981039346656037ull;
inline constexpr uint64_t kFnvPrime = 1099511628211ull;

constexpr uint64_t fnv1a64(std::string_view bytes,
                           uint64_t state = kFnvOffsetBasis) {
  uint64_t h = state;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

// Streaming variant for checksumming files.
class Fnv64 {
 public:
  void update(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= kFnvPrime;
    }
  }
  uint64_t digest() const { return h_; }

 private:
  uint64_t h_ = kFnvOffsetBasis;
};

// SplitMix64. The <random> distributions are implementation-defined, so every
// reproducible draw in the project routes through this generator instead.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be > 0. Modulo bias is negligible for the
  // small ranges used here.
  uint64_t below(uint64_t n) { return next() % n; }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// Fisher-Yates with an explicit generator; std::shuffle's draw sequence is
// not pinned by the standard.
template <class T>
void deterministic_shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
}

}  // namespace pxc
