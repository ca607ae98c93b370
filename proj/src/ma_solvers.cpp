#include "dcs/ma_solvers.hpp"

#include "dcs/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dcs {

namespace {

using Clock = std::chrono::steady_clock;

bool has_edgeless_frame(const TemporalGraph& g) {
  for (std::size_t t = 0; t < g.frame_count(); ++t)
    if (g.frame(t).empty()) return true;
  return false;
}

std::uint64_t min_edge_count(const TemporalGraph& g, const VertexSet& s) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t t = 0; t < g.frame_count() && best > 0; ++t) best = std::min(best, induced_stats(g, t, s).edge_count);
  return best;
}

// A set together with its MA numerator min_t |E_t[S]|.
struct Candidate {
  VertexSet set;
  std::uint64_t min_edges = 0;
};

// Larger min_edges/|S|, then smaller |S|, then lexicographically smaller.
bool better(const Candidate& a, const Candidate& b) {
  if (b.set.empty()) return !a.set.empty();
  const auto lhs = static_cast<unsigned __int128>(a.min_edges) * b.set.size();
  const auto rhs = static_cast<unsigned __int128>(b.min_edges) * a.set.size();
  if (lhs != rhs) return lhs > rhs;
  if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
  return a.set < b.set;
}

SolveReport finish(std::string name, const TemporalGraph& g, VertexSet solution, Clock::time_point start) {
  SolveReport r;
  r.algorithm = std::move(name);
  r.score = score(g, solution, ObjectiveKind::ma());
  r.solution = std::move(solution);
  r.wall_time = Clock::now() - start;
  return r;
}

SolveReport zero_score_report(std::string name, const TemporalGraph& g, Clock::time_point start) {
  auto r = finish(std::move(name), g, VertexSet::all(g.vertex_count()), start);
  r.zero_score_instance = true;
  return r;
}

// Largest b >= 0 with n^b <= T (n >= 2).
std::size_t floor_log(std::size_t n, std::size_t frames) {
  std::size_t b = 0;
  unsigned __int128 p = n;
  while (p <= frames) {
    ++b;
    p *= n;
  }
  return b;
}

}  // namespace

std::size_t subset_search_bound(std::size_t n, std::size_t frames) {
  if (n < 2) return 2;
  return std::max<std::size_t>(2, floor_log(n, frames));
}

std::size_t partition_block_count(std::size_t n, std::size_t frames) {
  // ceil(ln T) never sits on an integer boundary for T >= 2, since e^c is irrational.
  const auto ceil_ln = static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(frames))));
  return std::max<std::size_t>(1, std::min(n, 2 * ceil_ln));
}

std::vector<VertexSet> partition_blocks(std::size_t n, std::size_t blocks) {
  if (blocks == 0 || blocks > n) throw Error(ErrorCode::InvalidArgument, "block count must lie in [1, n]");
  std::vector<VertexSet> out;
  const std::size_t base = n / blocks, extra = n % blocks;
  Vertex next = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t size = base + (b < extra ? 1 : 0);
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < size; ++i) members.push_back(next++);
    out.emplace_back(std::move(members));
  }
  return out;
}

SolveReport greedy_cover(const TemporalGraph& g) {
  const auto start = Clock::now();
  if (has_edgeless_frame(g)) return zero_score_report("greedy-ma", g, start);

  const std::size_t n = g.vertex_count();
  std::vector<char> chosen(n, 0);
  std::vector<Vertex> members;
  std::vector<std::size_t> uncovered(g.frame_count());
  for (std::size_t t = 0; t < uncovered.size(); ++t) uncovered[t] = t;
  std::vector<std::size_t> trace;

  // touch[i][w]: w has a chosen neighbour in the i-th uncovered frame.
  std::vector<std::vector<char>> touch;
  while (!uncovered.empty()) {
    touch.assign(uncovered.size(), std::vector<char>(n, 0));
    for (std::size_t i = 0; i < uncovered.size(); ++i)
      for (Vertex s : members)
        for (Vertex w : g.neighbors(uncovered[i], s)) touch[i][w] = 1;

    std::size_t best_gain = 0;
    Vertex best_u = 0, best_v = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        std::size_t gain = 0;
        for (std::size_t i = 0; i < uncovered.size(); ++i) {
          if (touch[i][u] || touch[i][v] || g.has_edge(uncovered[i], u, v)) ++gain;
        }
        if (gain > best_gain) {
          best_gain = gain;
          best_u = u;
          best_v = v;
        }
      }
    }
    // Every uncovered frame still has an edge, so some pair gains.
    for (Vertex w : {best_u, best_v}) {
      if (!chosen[w]) {
        chosen[w] = 1;
        members.push_back(w);
      }
    }
    std::vector<std::size_t> still;
    for (std::size_t i = 0; i < uncovered.size(); ++i) {
      if (!(touch[i][best_u] || touch[i][best_v] || g.has_edge(uncovered[i], best_u, best_v))) still.push_back(uncovered[i]);
    }
    trace.push_back(best_gain);
    uncovered = std::move(still);
  }

  auto r = finish("greedy-ma", g, VertexSet(std::move(members)), start);
  r.frames_covered_per_iteration = std::move(trace);
  return r;
}

SolveReport best_with_all(const TemporalGraph& g) {
  const auto start = Clock::now();
  if (has_edgeless_frame(g)) return zero_score_report("best-with-all", g, start);

  auto greedy = greedy_cover(g);
  auto all = VertexSet::all(g.vertex_count());
  auto all_score = score(g, all, ObjectiveKind::ma());
  SolveReport r;
  if (greedy.score.value > all_score.value) {
    r = finish("best-with-all", g, greedy.solution, start);
  } else {
    r = finish("best-with-all", g, std::move(all), start);
  }
  r.frames_covered_per_iteration = std::move(greedy.frames_covered_per_iteration);
  return r;
}

SolveReport subset_search(const TemporalGraph& g) {
  const auto start = Clock::now();
  if (has_edgeless_frame(g)) return zero_score_report("subset-search", g, start);

  const std::size_t n = g.vertex_count();
  const std::size_t bound = std::min(n, subset_search_bound(n, g.frame_count()));
  Candidate best;
  std::vector<Vertex> current;

  // Sizes ascending, combinations in lexicographic order: a strict improvement
  // test therefore keeps the smallest, lexicographically first optimum.
  for (std::size_t size = 1; size <= bound; ++size) {
    current.resize(size);
    for (std::size_t i = 0; i < size; ++i) current[i] = static_cast<Vertex>(i);
    while (true) {
      Candidate c{VertexSet(current), 0};
      c.min_edges = min_edge_count(g, c.set);
      if (better(c, best)) best = std::move(c);

      std::size_t i = size;
      while (i > 0 && current[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++current[i - 1];
      for (std::size_t j = i; j < size; ++j) current[j] = current[j - 1] + 1;
    }
  }
  return finish("subset-search", g, std::move(best.set), start);
}

SolveReport partition_search(const TemporalGraph& g) {
  const auto start = Clock::now();
  if (has_edgeless_frame(g)) return zero_score_report("partition-search", g, start);

  const std::size_t r = partition_block_count(g.vertex_count(), g.frame_count());
  if (r >= 63) throw Error(ErrorCode::BudgetExceeded, "too many partition blocks");
  const auto blocks = partition_blocks(g.vertex_count(), r);

  Candidate best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    std::vector<Vertex> members;
    for (std::size_t b = 0; b < r; ++b)
      if (mask >> b & 1) members.insert(members.end(), blocks[b].begin(), blocks[b].end());
    Candidate c{VertexSet(std::move(members)), 0};
    c.min_edges = min_edge_count(g, c.set);
    if (better(c, best)) best = std::move(c);
  }
  return finish("partition-search", g, std::move(best.set), start);
}

SolveReport composite_ma(const TemporalGraph& g) {
  const auto start = Clock::now();
  if (has_edgeless_frame(g)) return zero_score_report("composite-ma", g, start);

  auto greedy = greedy_cover(g);
  Candidate best;
  for (const auto& candidate : {greedy.solution, subset_search(g).solution, partition_search(g).solution}) {
    Candidate c{candidate, min_edge_count(g, candidate)};
    if (better(c, best)) best = std::move(c);
  }
  auto r = finish("composite-ma", g, std::move(best.set), start);
  r.frames_covered_per_iteration = std::move(greedy.frames_covered_per_iteration);
  return r;
}

}  // namespace dcs
