#include "doctest.h"

#include "dcs/error.hpp"
#include "dcs/generators.hpp"
#include "dcs/mcss.hpp"
#include "dcs/oracle.hpp"
#include "support/instances.hpp"

#include <cmath>

using namespace dcs;

namespace {

TemporalGraph triangle_and_path() {
  return TemporalGraph(3, {{Edge{0, 1}, Edge{0, 2}, Edge{1, 2}}, {Edge{0, 1}, Edge{1, 2}}});
}

// Random instance whose frames are each connected: a spanning tree plus extras.
TemporalGraph random_feasible(SplitMix64& rng, std::size_t n, std::size_t frames, std::size_t max_union) {
  for (;;) {
    std::vector<std::vector<Edge>> out;
    for (std::size_t t = 0; t < frames; ++t) {
      auto f = testing::random_spanning_tree(rng, n);
      const double extra = rng.uniform() * 0.3;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng.bernoulli(extra)) f.push_back(Edge{u, v});
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      out.push_back(std::move(f));
    }
    TemporalGraph g(n, std::move(out));
    if (g.union_edges().size() <= max_union) return g;
  }
}

}  // namespace

TEST_SUITE("mcss") {
  TEST_CASE("greedy examples") {
    auto r = mcss_greedy(triangle_and_path());
    CHECK(r.solution.edges == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(r.potentials == std::vector<std::uint64_t>{4, 2, 0});

    TemporalGraph tree(5, {{Edge{0, 1}, Edge{1, 2}, Edge{1, 3}, Edge{3, 4}}});
    CHECK(mcss_greedy(tree).solution.size() == 4);

    std::vector<Edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    TemporalGraph repeated(4, {k4, k4, k4});
    auto rep = mcss_greedy(repeated);
    CHECK(rep.solution.size() == 3);
    CHECK(check_spanning(repeated, rep.solution));

    TemporalGraph disconnected(3, {{Edge{0, 1}}});
    try {
      mcss_greedy(disconnected);
      FAIL("expected InfeasibleFrame");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InfeasibleFrame);
    }
  }

  TEST_CASE("check_spanning examples") {
    auto g = triangle_and_path();
    CHECK(check_spanning(g, EdgeSolution{{{0, 1}, {1, 2}}}));
    CHECK_FALSE(check_spanning(g, EdgeSolution{}));
    CHECK(check_spanning(g, EdgeSolution{g.union_edges()}));
    CHECK_FALSE(check_spanning(g, EdgeSolution{{{0, 1}, {0, 2}}}));
    CHECK_THROWS_AS(check_spanning(TemporalGraph(3, {{Edge{0, 1}}}), EdgeSolution{{{1, 2}}}), Error);
  }

  TEST_CASE("potential examples") {
    auto g = triangle_and_path();
    CHECK(potential(g, EdgeSolution{}) == 4);
    CHECK(potential(g, EdgeSolution{{{0, 2}}}) == 3);
    CHECK(potential(g, EdgeSolution{{{0, 1}, {1, 2}}}) == 0);
    CHECK_THROWS_AS(potential(TemporalGraph(3, {{Edge{0, 1}}}), EdgeSolution{{{1, 2}}}), Error);
  }

  TEST_CASE("serialize_edges") {
    CHECK(serialize_edges(EdgeSolution{{{0, 1}, {1, 2}}}) == "0 1\n1 2\n");
  }

  TEST_CASE("property: greedy trace, feasibility and size bounds") {
    SplitMix64 rng(81);
    for (int iter = 0; iter < 120; ++iter) {
      const std::size_t n = 2 + rng.below(7);
      const std::size_t frames = 1 + rng.below(4);
      auto g = random_feasible(rng, n, frames, 16);
      auto r = mcss_greedy(g);
      CHECK(check_spanning(g, r.solution));
      CHECK(r.solution.size() >= n - 1);
      REQUIRE(r.potentials.size() == r.solution.size() + 1);
      CHECK(r.potentials.front() == n * frames - frames);
      CHECK(r.potentials.back() == 0);
      for (std::size_t i = 1; i < r.potentials.size(); ++i) CHECK(r.potentials[i] < r.potentials[i - 1]);
      CHECK(potential(g, r.solution) == 0);

      const auto opt = static_cast<double>(exact_mcss(g).size());
      CHECK(static_cast<double>(r.solution.size()) <= (std::log(static_cast<double>(frames)) + 1.0) * opt + 1.0);
    }
  }

  TEST_CASE("property: greedy keeps the forced path on set-cover instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto sc = gen_random_setcover(SetCoverParams{1 + seed % 5, 1 + seed % 6, 0.35, seed});
      auto g = reduce_setcover_to_mcss(sc).graph;
      auto r = mcss_greedy(g);
      CHECK(check_spanning(g, r.solution));
      CHECK(r.solution.size() >= sc.sets.size() + 1);
    }
  }
}
