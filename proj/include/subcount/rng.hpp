#pragma once

#include <cstdint>
#include <vector>

namespace subcount {

// SplitMix64 finalizer. Invertible on 64 bits.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Keyed hash of a vertex id. `stream` separates independent uses of the same
// seed (coloring vs retention); results for distinct streams are decorrelated
// by the double mix.
inline std::uint64_t hash64(std::uint64_t seed, std::uint64_t stream, std::uint64_t x) {
  return mix64(x ^ mix64(seed ^ (stream * 0xbf58476d1ce4e5b9ULL)));
}

inline double to_unit(std::uint64_t u) {
  // 53-bit mantissa, uniform on [0,1).
  return static_cast<double>(u >> 11) * 0x1.0p-53;
}

// Deterministic generator for instance construction. Counter-based so the
// stream depends only on the seed, not on platform library details. The seed
// is scrambled into the counter start; otherwise consecutive seeds would
// yield shifted, overlapping draw sequences.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix64(seed)) {}

  std::uint64_t next() { return mix64(state_++); }

  double unit() { return to_unit(next()); }

  // Uniform in [0, n). Lemire's multiply-shift with rejection.
  std::uint64_t bounded(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t cutoff = (0ULL - n) % n;  // 2^64 mod n
    while (true) {
      unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
      if (static_cast<std::uint64_t>(m) >= cutoff) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  bool flip() { return next() & 1; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace subcount
