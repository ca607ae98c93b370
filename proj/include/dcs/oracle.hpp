#pragma once

#include "dcs/generators.hpp"
#include "dcs/objectives.hpp"
#include "dcs/temporal_graph.hpp"

#include <cstddef>
#include <vector>

namespace dcs {

// Exhaustive solvers used as ground truth. Exceeding a cap raises
// BudgetExceeded; nothing is ever truncated silently.
struct OracleBudget {
  std::size_t max_vertices = 20;
  std::size_t max_union_edges = 22;
};

struct OracleResult {
  VertexSet solution;
  Score score;
};

// Maximises score(g, S, kind) over all nonempty S. Ties go to the smaller
// set, then to the lexicographically smaller member list, so the result does
// not depend on `threads`.
OracleResult exact_best(const TemporalGraph& g, const ObjectiveKind& kind, const OracleBudget& budget = {},
                        unsigned threads = 1);

// Minimum-cardinality F ⊆ E spanning every frame. Throws InfeasibleFrame when
// a frame is disconnected.
std::vector<Edge> exact_mcss(const TemporalGraph& g, const OracleBudget& budget = {});

// Minimum |A'| + |B'| covering every superedge.
std::size_t exact_minrep(const MinRepInstance& mr, const OracleBudget& budget = {});

// Maximum independent set size of a single-frame graph.
std::size_t exact_mis(const TemporalGraph& graph, const OracleBudget& budget = {});

// Minimum number of sets covering the universe.
std::size_t exact_setcover(const SetCoverInstance& sc, const OracleBudget& budget = {});

}  // namespace dcs
