#include "dcs/random.hpp"

#include <algorithm>
#include <numeric>

namespace dcs {

std::vector<std::uint32_t> SplitMix64::sample_subset(std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0U);
  k = std::min(k, n);
  for (std::uint32_t i = 0; i < k; ++i) {
    auto j = i + static_cast<std::uint32_t>(below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace dcs
