#pragma once

// Random instance helpers shared by the unit and acceptance suites.

#include "dcs/random.hpp"
#include "dcs/rational.hpp"
#include "dcs/temporal_graph.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace dcs::testing {

// Each frame is G(n, p) with p drawn per frame from U[0, 1).
inline TemporalGraph random_temporal_graph(SplitMix64& rng, std::size_t n, std::size_t frames) {
  std::vector<std::vector<Edge>> out(frames);
  for (auto& f : out) {
    const double p = rng.uniform();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(p)) f.push_back(Edge{u, v});
  }
  return TemporalGraph(n, std::move(out));
}

// As above, but every frame gets at least one edge (n >= 2).
inline TemporalGraph random_nonedgeless_graph(SplitMix64& rng, std::size_t n, std::size_t frames) {
  auto g = random_temporal_graph(rng, n, frames);
  std::vector<std::vector<Edge>> out;
  for (std::size_t t = 0; t < frames; ++t) {
    auto f = g.frame(t);
    out.emplace_back(f.begin(), f.end());
    if (out.back().empty()) {
      const auto u = static_cast<Vertex>(rng.below(n));
      auto v = static_cast<Vertex>(rng.below(n - 1));
      if (v >= u) ++v;
      out.back().push_back(make_edge(u, v));
    }
  }
  return TemporalGraph(n, std::move(out));
}

// Random spanning tree of K_n (random attachment order), as edges.
inline std::vector<Edge> random_spanning_tree(SplitMix64& rng, std::size_t n) {
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<Edge> tree;
  for (std::size_t i = 1; i < n; ++i) tree.push_back(make_edge(order[i], order[rng.below(i)]));
  return tree;
}

// Certified rational lower bound on ln(x) for x >= 1.
inline Rational ln_lower_bound(std::uint64_t x) {
  const double approx = std::log(static_cast<double>(x));
  Rational lower(approx);
  lower -= Rational(1, 1000000000);
  if (lower < 0) lower = 0;
  return lower;
}

// Relabels vertices by a random permutation.
inline TemporalGraph permute(SplitMix64& rng, const TemporalGraph& g, std::vector<Vertex>* perm_out = nullptr) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::vector<Edge>> frames;
  for (std::size_t t = 0; t < g.frame_count(); ++t) {
    std::vector<Edge> f;
    for (const auto& e : g.frame(t)) f.push_back(make_edge(perm[e.u], perm[e.v]));
    frames.push_back(std::move(f));
  }
  if (perm_out) *perm_out = perm;
  return TemporalGraph(n, std::move(frames));
}

}  // namespace dcs::testing
