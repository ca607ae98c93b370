#include "doctest.h"

#include "dcs/error.hpp"
#include "dcs/temporal_graph.hpp"
#include "support/instances.hpp"

#include <algorithm>
#include <set>

using namespace dcs;

namespace {

const char* kTiny = "3 2\n0 0 1\n1 0 1\n1 1 2\n";

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidArgument;
}

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_dcs(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("temporal_graph") {
  TEST_CASE("parse reads the two-frame example") {
    auto g = parse_dcs(kTiny);
    CHECK(g.vertex_count() == 3);
    CHECK(g.frame_count() == 2);
    CHECK(std::vector<Edge>(g.frame(0).begin(), g.frame(0).end()) == std::vector<Edge>{{0, 1}});
    CHECK(std::vector<Edge>(g.frame(1).begin(), g.frame(1).end()) == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.union_edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  }

  TEST_CASE("degenerate single vertex graph") {
    auto g = parse_dcs("1 1\n");
    CHECK(g.vertex_count() == 1);
    CHECK(g.frame_count() == 1);
    CHECK(g.frame(0).empty());
    CHECK(serialize_dcs(g) == "1 1\n");
  }

  TEST_CASE("parse errors name the offending line") {
    CHECK(code_of([] { parse_dcs("2 1\n0 1 1\n"); }) == ErrorCode::SelfLoop);
    CHECK(parse_error_line("2 1\n0 1 1\n") == 2);

    CHECK(code_of([] { parse_dcs("3 1\n0 0 1\n0 1 0\n"); }) == ErrorCode::DuplicateEdge);
    CHECK(parse_error_line("3 1\n0 0 1\n0 1 0\n") == 3);

    CHECK(code_of([] { parse_dcs("3 1\n0 0 3\n"); }) == ErrorCode::EdgeOutOfRange);
    CHECK(code_of([] { parse_dcs("3 1\n1 0 2\n"); }) == ErrorCode::EdgeOutOfRange);
    CHECK(code_of([] { parse_dcs("3\n"); }) == ErrorCode::MalformedHeader);
    CHECK(code_of([] { parse_dcs("0 1\n"); }) == ErrorCode::MalformedHeader);
    CHECK(code_of([] { parse_dcs(""); }) == ErrorCode::MalformedHeader);
    CHECK(code_of([] { parse_dcs("3 1\n0 x 1\n"); }) == ErrorCode::MalformedLine);
  }

  TEST_CASE("comments and blank lines are ignored") {
    auto g = parse_dcs("# header follows\n3 2\n\n# frame 0\n0 0 1\n  1   1 0 \r\n1 2 1\n");
    CHECK(serialize_dcs(g) == kTiny);
  }

  TEST_CASE("serialize is canonical") {
    TemporalGraph g(2, {{Edge{1, 0}}});
    CHECK(serialize_dcs(g) == "2 1\n0 0 1\n");
    CHECK(serialize_dcs(parse_dcs(kTiny)) == kTiny);
  }

  TEST_CASE("constructor rejects invalid frames") {
    CHECK(code_of([] { TemporalGraph(3, {{Edge{0, 1}, Edge{1, 0}}}); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([] { TemporalGraph(3, {{Edge{2, 2}}}); }) == ErrorCode::SelfLoop);
    CHECK(code_of([] { TemporalGraph(3, {{Edge{0, 5}}}); }) == ErrorCode::EdgeOutOfRange);
  }

  TEST_CASE("induced_stats examples") {
    auto g = parse_dcs(kTiny);
    CHECK(induced_stats(g, 1, VertexSet{0, 1, 2}) == FrameStats{2, 1});
    CHECK(induced_stats(g, 0, VertexSet{2}) == FrameStats{0, 0});
    CHECK(induced_stats(g, 0, VertexSet{0, 1}) == FrameStats{1, 1});
    CHECK(code_of([&] { induced_stats(g, 2, VertexSet{0}); }) == ErrorCode::FrameIndexOutOfRange);
    CHECK(code_of([&] { induced_stats(g, 0, VertexSet{}); }) == ErrorCode::EmptySolution);
  }

  TEST_CASE("vertex sets are canonical") {
    VertexSet s{3, 1, 3, 2};
    CHECK(s.members() == std::vector<Vertex>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(0));
    CHECK(VertexSet{0, 3} < VertexSet{1, 2});
  }

  TEST_CASE("property: serialize/parse round trip") {
    SplitMix64 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
      auto g = testing::random_temporal_graph(rng, 1 + rng.below(10), 1 + rng.below(4));
      auto text = serialize_dcs(g);
      auto back = parse_dcs(text);
      CHECK(back == g);
      CHECK(serialize_dcs(back) == text);
    }
  }

  TEST_CASE("property: induced_stats matches a naive pair loop") {
    SplitMix64 rng(12);
    for (int iter = 0; iter < 200; ++iter) {
      const std::size_t n = 1 + rng.below(12);
      auto g = testing::random_temporal_graph(rng, n, 1 + rng.below(3));
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v)
        if (rng.bernoulli(0.5)) members.push_back(v);
      if (members.empty()) members.push_back(0);
      VertexSet s(members);

      for (std::size_t t = 0; t < g.frame_count(); ++t) {
        std::set<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : g.frame(t)) edges.insert({e.u, e.v});
        std::uint64_t count = 0;
        std::uint32_t min_deg = ~0U;
        for (Vertex a : s) {
          std::uint32_t d = 0;
          for (Vertex b : s) {
            if (a < b && edges.count({a, b})) ++count;
            if (a != b && edges.count({std::min(a, b), std::max(a, b)})) ++d;
          }
          min_deg = std::min(min_deg, d);
        }
        CHECK(induced_stats(g, t, s) == FrameStats{count, min_deg});
      }

      auto all = VertexSet::all(n);
      for (std::size_t t = 0; t < g.frame_count(); ++t) {
        std::uint32_t global_min = ~0U;
        for (Vertex v = 0; v < n; ++v) global_min = std::min(global_min, g.degree(t, v));
        CHECK(induced_stats(g, t, all) == FrameStats{g.frame(t).size(), global_min});
      }
    }
  }
}
