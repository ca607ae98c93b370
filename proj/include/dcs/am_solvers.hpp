#pragma once

#include "dcs/rational.hpp"
#include "dcs/temporal_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace dcs {

// Per-frame minimum-degree thresholds (k_1, ..., k_T).
struct CoreVector {
  std::vector<std::uint32_t> k;

  std::uint64_t sum() const;
  friend bool operator==(const CoreVector&, const CoreVector&) = default;
};

// Maximal S with min-deg(G_t[S]) >= k_t for every t, by peeling from V.
// Possibly empty. With a seed, the next violating vertex to remove is drawn
// at random instead of in queue order; the result is the same either way.
VertexSet core(const TemporalGraph& g, const CoreVector& kv, std::optional<std::uint64_t> removal_seed = std::nullopt);

// Peeling restricted to start from `within` instead of V.
VertexSet core_within(const TemporalGraph& g, const CoreVector& kv, const VertexSet& within);

struct AmResult {
  VertexSet solution;
  // AM value of `solution`.
  std::uint64_t value = 0;
  // Threshold vector whose core is `solution`.
  CoreVector vector;
  // Number of threshold vectors whose core was computed.
  std::uint64_t vectors_visited = 0;
};

inline constexpr std::uint64_t kDefaultAmVectorCap = 100'000'000;

// Maximises sum(k) over vectors with a nonempty core, k_t in [0, maxdeg_t].
// Ties go to the lexicographically smallest vector. Throws BudgetExceeded
// when more than `vector_cap` vectors would be visited.
AmResult exact_am(const TemporalGraph& g, std::uint64_t vector_cap = kDefaultAmVectorCap);

// {0} ∪ {floor((1+eps)^l) : l >= 0} ∩ [0, max_value], ascending, computed
// exactly.
std::vector<std::uint32_t> fpt_grid(const Rational& eps, std::uint32_t max_value);

// Same search restricted to grid thresholds; the value reported is the AM
// score of the returned core, which is at least exact_am / (1 + eps).
AmResult fpt_approx_am(const TemporalGraph& g, const Rational& eps, std::uint64_t vector_cap = kDefaultAmVectorCap);

}  // namespace dcs
