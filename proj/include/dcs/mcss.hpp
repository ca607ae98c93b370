#pragma once

#include "dcs/temporal_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dcs {

// Subset of the union edge set, sorted.
struct EdgeSolution {
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return edges.size(); }
};

struct McssGreedyResult {
  EdgeSolution solution;
  // Potential before the first pick and after every pick.
  std::vector<std::uint64_t> potentials;
  // Index of the first pick made with potential <= n (where a two-phase
  // variant would switch to closing edges); empty if never reached by a pick.
  std::optional<std::size_t> phase_boundary;
};

// Repeatedly adds the union edge merging the most components summed over
// frames (lexicographically smallest edge on ties) until every frame is
// spanned. Throws InfeasibleFrame when a frame is disconnected.
McssGreedyResult mcss_greedy(const TemporalGraph& g);

// True iff (V, F ∩ E_t) is connected for every t. Throws EdgeNotInUnion.
bool check_spanning(const TemporalGraph& g, const EdgeSolution& f);

// Sum over frames of the component count of (V, F ∩ E_t), minus T.
std::uint64_t potential(const TemporalGraph& g, const EdgeSolution& f);

// "u v" per line.
std::string serialize_edges(const EdgeSolution& f);

}  // namespace dcs
