#include "doctest.h"

#include "dcs/error.hpp"
#include "dcs/generators.hpp"
#include "dcs/lp.hpp"
#include "support/instances.hpp"

#include <cmath>

using namespace dcs;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

TemporalGraph tiny() { return parse_dcs("3 2\n0 0 1\n1 0 1\n1 1 2\n"); }

FractionalSolution uniform_on(const TemporalGraph& g, const VertexSet& s) {
  FractionalSolution f;
  const Rational share = Rational(1) / Rational(mpz_class(static_cast<unsigned long>(s.size())));
  f.y.assign(g.vertex_count(), 0);
  for (Vertex v : s) f.y[v] = share;
  for (const auto& e : g.union_edges()) f.x[e] = (s.contains(e.u) && s.contains(e.v)) ? share : Rational(0);
  f.z = 0;
  return f;
}

}  // namespace

TEST_SUITE("lp") {
  TEST_CASE("build_lp sizes") {
    auto m = build_lp(tiny());
    CHECK(m.variables == std::vector<std::string>{"y0", "y1", "y2", "x_0_1", "x_1_2", "z"});
    CHECK(m.constraints.size() == 7);

    auto one = build_lp(TemporalGraph(2, {{Edge{0, 1}}}));
    CHECK(one.variables.size() == 4);
    CHECK(one.constraints.size() == 4);

    auto empty = build_lp(TemporalGraph(3, {{}, {}}));
    CHECK(empty.variables.size() == 4);
    REQUIRE(empty.constraints.size() == 3);
    CHECK(empty.constraints[1].terms.size() == 1);  // z <= 0
    CHECK(empty.constraints[1].rhs == 0);
  }

  TEST_CASE("export_lp layout") {
    auto text = export_lp(build_lp(tiny()));
    auto maximize = text.find("Maximize\n");
    auto subject = text.find("Subject To\n");
    auto bounds = text.find("Bounds\n");
    auto end = text.find("End\n");
    CHECK(maximize != std::string::npos);
    CHECK(maximize < subject);
    CHECK(subject < bounds);
    CHECK(bounds < end);
    CHECK(text.find(" norm: y0 + y1 + y2 = 1\n") != std::string::npos);
    CHECK(text.find(" cap_0_1_u: x_0_1 - y0 <= 0\n") != std::string::npos);
    CHECK(text.find(" frame_1: z - x_0_1 - x_1_2 <= 0\n") != std::string::npos);
    CHECK(text.find(" z free\n") != std::string::npos);
    CHECK(export_lp(build_lp(tiny())) == text);
  }

  TEST_CASE("check_feasible examples") {
    auto g = tiny();
    auto f = uniform_on(g, VertexSet::all(3));
    for (auto& [e, x] : f.x) x = 0;
    auto r = check_feasible(g, f);
    CHECK(r.feasible);
    CHECK(r.objective == 0);

    auto h = harmonic_solution(4);
    auto ok = check_feasible(h.graph, h.solution);
    CHECK(ok.feasible);
    CHECK(ok.violations.empty());
    CHECK(ok.objective == q(6, 17));

    auto bumped = h.solution;
    bumped.z += q(1, 100);
    auto bad = check_feasible(h.graph, bumped);
    CHECK_FALSE(bad.feasible);
    REQUIRE(bad.violations.size() == 3);
    CHECK(bad.violations[0].constraint == "frame_0");

    auto wrong = h.solution;
    wrong.y.pop_back();
    CHECK_THROWS_AS(check_feasible(h.graph, wrong), Error);
  }

  TEST_CASE("harmonic_solution values") {
    auto four = harmonic_solution(4);
    CHECK(four.h == q(6, 17));
    CHECK(four.solution.y == std::vector<Rational>{q(6, 17), q(6, 17), q(3, 17), q(2, 17)});
    for (std::size_t t = 0; t < four.graph.frame_count(); ++t) {
      Rational mass = 0;
      for (const auto& e : four.graph.frame(t)) mass += four.solution.x.at(e);
      CHECK(mass == q(6, 17));
    }
    CHECK(harmonic_solution(3).h == q(2, 5));

    auto two = harmonic_solution(2);
    CHECK(two.h == q(1, 2));
    CHECK(two.graph.frame_count() == 1);
    CHECK(two.graph.frame(0).size() == 1);
    CHECK(two.solution.z == q(1, 2));
  }

  TEST_CASE("gap_report examples") {
    auto four = gap_report(4);
    CHECK(four.lp_value == q(6, 17));
    CHECK(four.integral_opt == q(1, 4));
    CHECK(four.ratio == q(24, 17));

    auto three = gap_report(3);
    CHECK(three.lp_value == q(2, 5));
    CHECK(three.integral_opt == q(1, 3));
    CHECK(three.ratio == q(6, 5));

    CHECK(gap_report(8).integral_opt == q(1, 8));
  }

  TEST_CASE("property: harmonic solutions are feasible and normalised") {
    for (std::size_t n = 2; n <= 64; ++n) {
      auto h = harmonic_solution(n);
      auto r = check_feasible(h.graph, h.solution);
      CHECK(r.feasible);
      Rational total = 0;
      for (const auto& y : h.solution.y) total += y;
      CHECK(total == 1);
      if (n >= 3) {
        // n / (1 + H_{n-1}) >= n / (ln(n-1) + 2)
        const Rational ratio = Rational(mpz_class(static_cast<unsigned long>(n))) * h.h;
        CHECK(ratio.get_d() >= static_cast<double>(n) / (std::log(static_cast<double>(n - 1)) + 2.0));
      }
    }
  }

  TEST_CASE("property: single-frame integral solutions are LP feasible") {
    SplitMix64 rng(61);
    for (int iter = 0; iter < 100; ++iter) {
      const std::size_t n = 1 + rng.below(10);
      auto g = testing::random_temporal_graph(rng, n, 1);
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v)
        if (rng.bernoulli(0.5)) members.push_back(v);
      if (members.empty()) members.push_back(0);
      VertexSet s(members);
      auto f = uniform_on(g, s);
      f.z = make_rational(static_cast<long>(induced_stats(g, 0, s).edge_count), static_cast<long>(s.size()));
      CHECK(check_feasible(g, f).feasible);
    }
  }
}
