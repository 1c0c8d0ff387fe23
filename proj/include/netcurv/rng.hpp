#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>

namespace netcurv {

/// Name recorded in run manifests so outputs can be matched to the
/// generator that produced them.
inline constexpr const char* kRngAlgorithm = "splitmix64";

/// splitmix64 stream. The update rule is fixed by two multiplicative
/// constants, so seeded runs reproduce byte-for-byte on any platform,
/// unlike std:: distributions whose output is implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) built from the top 53 bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, n). Rejection sampled.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  /// Derives an independent child stream.
  SplitMix64 split() { return SplitMix64(next_u64()); }

  /// Fisher-Yates shuffle driven by this stream.
  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace netcurv
