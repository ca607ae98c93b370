#pragma once

#include <cstdint>
#include <vector>

namespace dcs {

// splitmix64 output mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// splitmix64 generator. All seeded generators draw from sub-streams created
// by SplitMix64::stream(seed, index), whose initial state is
//   mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15)).
// Frame t of a generated sequence uses stream index t; auxiliary draws (subset
// choices, planted layers) use indices from 2^32 upward. Reimplementing these
// three functions reproduces every generated instance bit for bit.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kAuxiliaryBase = std::uint64_t{1} << 32;

  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(mix64(seed ^ mix64(index + kGamma)));
  }

  std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) noexcept { return uniform() < p; }

  // Uniform in [0, bound) by rejection (no modulo bias); bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  // Uniformly random k-subset of [0, n), sorted (partial Fisher-Yates).
  std::vector<std::uint32_t> sample_subset(std::uint32_t n, std::uint32_t k);

 private:
  std::uint64_t state_;
};

}  // namespace dcs
