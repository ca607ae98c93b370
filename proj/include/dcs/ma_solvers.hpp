#pragma once

#include "dcs/objectives.hpp"
#include "dcs/temporal_graph.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dcs {

struct SolveReport {
  std::string algorithm;
  VertexSet solution;
  Score score;
  // Frames newly covered by each greedy pick (greedy-based solvers only).
  std::vector<std::size_t> frames_covered_per_iteration;
  std::chrono::duration<double> wall_time{0};
  std::optional<std::uint64_t> seed;
  // Set when some frame has no edges, so every set scores 0 and V is returned.
  bool zero_score_instance = false;
};

// Greedy frame cover: repeatedly add the vertex pair that covers the most
// still-uncovered frames (lexicographically smallest pair on ties).
SolveReport greedy_cover(const TemporalGraph& g);

// Better of V and greedy_cover's set under MA; ties keep V.
SolveReport best_with_all(const TemporalGraph& g);

// Best set among all sets of size <= max(2, floor(log_n T)).
SolveReport subset_search(const TemporalGraph& g);

// Best union of blocks over r = min(n, 2*ceil(ln T)) contiguous near-equal
// vertex blocks (r >= 1).
SolveReport partition_search(const TemporalGraph& g);

// Best of greedy_cover, subset_search and partition_search.
SolveReport composite_ma(const TemporalGraph& g);

// Helpers exposed for tests.
std::size_t subset_search_bound(std::size_t n, std::size_t frames);
std::size_t partition_block_count(std::size_t n, std::size_t frames);
std::vector<VertexSet> partition_blocks(std::size_t n, std::size_t blocks);

}  // namespace dcs
