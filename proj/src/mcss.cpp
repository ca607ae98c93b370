#include "dcs/mcss.hpp"

#include "dcs/error.hpp"

#include <algorithm>
#include <numeric>

namespace dcs {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --components_;
    return true;
  }

  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t components_;
};

// For each union edge, the frames containing it.
std::vector<std::vector<std::size_t>> frames_per_edge(const TemporalGraph& g) {
  std::vector<std::vector<std::size_t>> out(g.union_edges().size());
  for (std::size_t t = 0; t < g.frame_count(); ++t)
    for (const auto& e : g.frame(t)) out[g.union_index(e)].push_back(t);
  return out;
}

std::vector<DisjointSets> frame_components(const TemporalGraph& g, const EdgeSolution& f) {
  const auto membership = frames_per_edge(g);
  std::vector<DisjointSets> dsu(g.frame_count(), DisjointSets(g.vertex_count()));
  for (const auto& e : f.edges) {
    const auto idx = g.union_index(e);
    if (idx == TemporalGraph::npos) {
      throw Error(ErrorCode::EdgeNotInUnion, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is in no frame");
    }
    for (auto t : membership[idx]) dsu[t].unite(e.u, e.v);
  }
  return dsu;
}

}  // namespace

McssGreedyResult mcss_greedy(const TemporalGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t frames = g.frame_count();
  for (std::size_t t = 0; t < frames; ++t) {
    DisjointSets check(n);
    for (const auto& e : g.frame(t)) check.unite(e.u, e.v);
    if (check.components() != 1) throw Error(ErrorCode::InfeasibleFrame, "frame " + std::to_string(t) + " is disconnected");
  }

  const auto& edges = g.union_edges();
  const auto membership = frames_per_edge(g);
  std::vector<DisjointSets> dsu(frames, DisjointSets(n));
  std::vector<char> taken(edges.size(), 0);

  McssGreedyResult result;
  std::uint64_t rho = static_cast<std::uint64_t>(n) * frames - frames;
  result.potentials.push_back(rho);
  while (rho > 0) {
    std::size_t best = edges.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (taken[i]) continue;
      std::size_t gain = 0;
      for (auto t : membership[i])
        if (dsu[t].find(edges[i].u) != dsu[t].find(edges[i].v)) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    // Connected frames always leave an edge with positive gain.
    if (rho <= n && !result.phase_boundary) result.phase_boundary = result.solution.edges.size();
    taken[best] = 1;
    for (auto t : membership[best]) dsu[t].unite(edges[best].u, edges[best].v);
    result.solution.edges.push_back(edges[best]);
    rho -= best_gain;
    result.potentials.push_back(rho);
  }
  std::sort(result.solution.edges.begin(), result.solution.edges.end());
  return result;
}

bool check_spanning(const TemporalGraph& g, const EdgeSolution& f) {
  auto dsu = frame_components(g, f);
  return std::all_of(dsu.begin(), dsu.end(), [](const DisjointSets& d) { return d.components() == 1; });
}

std::uint64_t potential(const TemporalGraph& g, const EdgeSolution& f) {
  std::uint64_t total = 0;
  for (const auto& d : frame_components(g, f)) total += d.components();
  return total - g.frame_count();
}

std::string serialize_edges(const EdgeSolution& f) {
  std::string out;
  for (const auto& e : f.edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace dcs
