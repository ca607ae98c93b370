#include "doctest.h"

#include "dcs/generators.hpp"
#include "dcs/ma_solvers.hpp"
#include "dcs/oracle.hpp"
#include "support/instances.hpp"

using namespace dcs;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

TemporalGraph tiny() { return parse_dcs("3 2\n0 0 1\n1 0 1\n1 1 2\n"); }

TemporalGraph k4() {
  return TemporalGraph(4, {{Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3}, Edge{2, 3}}});
}

void check_report(const TemporalGraph& g, const SolveReport& r) {
  auto again = score(g, r.solution, ObjectiveKind::ma());
  CHECK(again.value == r.score.value);
  CHECK(again.per_frame == r.score.per_frame);
}

}  // namespace

TEST_SUITE("ma_solvers") {
  TEST_CASE("greedy_cover traces") {
    TemporalGraph g(3, {{Edge{0, 1}}, {Edge{0, 2}, Edge{1, 2}}});
    auto r = greedy_cover(g);
    CHECK(r.solution == VertexSet{0, 1, 2});
    CHECK(r.score.value == q(1, 3));
    CHECK(r.frames_covered_per_iteration == std::vector<std::size_t>{1, 1});

    auto t = greedy_cover(tiny());
    CHECK(t.solution == VertexSet{0, 1});
    CHECK(t.score.value == q(1, 2));
    CHECK(t.frames_covered_per_iteration == std::vector<std::size_t>{2});

    auto single = greedy_cover(TemporalGraph(4, {{Edge{2, 3}}}));
    CHECK(single.solution == VertexSet{2, 3});
    CHECK(single.score.value == q(1, 2));
  }

  TEST_CASE("edgeless frames short-circuit to V") {
    TemporalGraph g(3, {{Edge{0, 1}}, {}});
    for (auto r : {greedy_cover(g), best_with_all(g), subset_search(g), partition_search(g), composite_ma(g)}) {
      CHECK(r.zero_score_instance);
      CHECK(r.solution == VertexSet{0, 1, 2});
      CHECK(r.score.value == 0);
    }
  }

  TEST_CASE("best_with_all examples") {
    auto r = best_with_all(tiny());
    CHECK(r.solution == VertexSet{0, 1});
    CHECK(r.score.value == q(1, 2));

    auto full = best_with_all(k4());
    CHECK(full.solution == VertexSet{0, 1, 2, 3});
    CHECK(full.score.value == q(3, 2));
  }

  TEST_CASE("subset_search bound and examples") {
    CHECK(subset_search_bound(3, 2) == 2);
    CHECK(subset_search_bound(5, 5) == 2);
    CHECK(subset_search_bound(2, 8) == 3);
    CHECK(subset_search_bound(3, 27) == 3);
    CHECK(subset_search_bound(3, 26) == 2);

    auto r = subset_search(tiny());
    CHECK(r.solution == VertexSet{0, 1});
    CHECK(r.score.value == q(1, 2));
  }

  TEST_CASE("partition_search blocks and examples") {
    CHECK(partition_block_count(3, 2) == 2);
    CHECK(partition_block_count(100, 2) == 2);
    CHECK(partition_block_count(100, 3) == 4);
    CHECK(partition_block_count(5, 1) == 1);
    CHECK(partition_block_count(3, 100) == 3);

    auto blocks = partition_blocks(3, 2);
    CHECK(blocks == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{2}});
    auto halves = partition_blocks(100, 2);
    CHECK(halves[0].size() == 50);
    CHECK(halves[1].size() == 50);

    auto r = partition_search(tiny());
    CHECK(r.solution == VertexSet{0, 1});
    CHECK(r.score.value == q(1, 2));
  }

  TEST_CASE("partition_search is exhaustive once r reaches n") {
    SplitMix64 rng(41);
    for (int iter = 0; iter < 20; ++iter) {
      const std::size_t n = 2 + rng.below(3);
      // T = 30 gives r = 2*ceil(ln 30) = 8 >= n.
      auto g = testing::random_nonedgeless_graph(rng, n, 30);
      CHECK(partition_block_count(n, 30) == n);
      auto r = partition_search(g);
      auto opt = exact_best(g, ObjectiveKind::ma());
      CHECK(r.score.value == opt.score.value);
      CHECK(r.solution == opt.solution);
    }
  }

  TEST_CASE("composite_ma examples") {
    auto r = composite_ma(tiny());
    CHECK(r.solution == VertexSet{0, 1});
    CHECK(r.score.value == q(1, 2));

    auto gap = composite_ma(gen_gap_instance(4));
    CHECK(gap.solution == VertexSet{0, 1, 2, 3});
    CHECK(gap.score.value == q(1, 4));
  }

  TEST_CASE("property: approximation guarantees hold against the oracle") {
    SplitMix64 rng(42);
    for (int iter = 0; iter < 150; ++iter) {
      const std::size_t n = 2 + rng.below(11);
      const std::size_t frames = 2 + rng.below(3);
      auto g = testing::random_nonedgeless_graph(rng, n, frames);
      auto opt = exact_best(g, ObjectiveKind::ma());
      const Rational& best = opt.score.value;

      auto composite = composite_ma(g);
      check_report(g, composite);
      // score * n^(2/3) >= OPT  <=>  score^3 * n^2 >= OPT^3
      const Rational c = composite.score.value;
      CHECK(c * c * c * Rational(mpz_class(static_cast<unsigned long>(n * n))) >= best * best * best);

      auto with_all = best_with_all(g);
      check_report(g, with_all);
      const Rational w = with_all.score.value;
      // score * sqrt(2 n ln T) >= OPT, with ln T replaced by a lower bound.
      CHECK(w * w * 2 * Rational(mpz_class(static_cast<unsigned long>(n))) * testing::ln_lower_bound(frames) >=
            best * best);

      auto greedy = greedy_cover(g);
      check_report(g, greedy);
      const std::size_t iterations = greedy.frames_covered_per_iteration.size();
      CHECK(iterations <= frames);
      // iterations <= ceil(2 k ln T / OPT)  <=>  iterations - 1 < 2 k ln T / OPT
      const Rational k(mpz_class(static_cast<unsigned long>(opt.solution.size())));
      CHECK(Rational(mpz_class(static_cast<unsigned long>(iterations - 1))) * best <
            2 * k * testing::ln_lower_bound(frames));

      check_report(g, subset_search(g));
      check_report(g, partition_search(g));
    }
  }
}
