#pragma once

#include "dcs/oracle.hpp"
#include "dcs/rational.hpp"
#include "dcs/temporal_graph.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace dcs {

// LP relaxation of DCS-MA:
//   maximize z
//   s.t. sum_v y_v = 1
//        x_e <= y_u, x_e <= y_v     for every union edge e = (u, v)
//        z <= sum_{e in E_t} x_e    for every frame t
//        x, y >= 0
// One x variable per union edge, shared by every frame containing it.
struct LinearTerm {
  std::size_t variable = 0;
  Rational coefficient;
};

enum class Sense { LessEqual, Equal };

struct Constraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::LessEqual;
  Rational rhs;
};

struct LPModel {
  std::size_t vertex_count = 0;
  std::size_t frame_count = 0;
  std::vector<Edge> edges;
  // y0..y{n-1}, then x_u_v per union edge, then z.
  std::vector<std::string> variables;
  std::vector<Constraint> constraints;

  std::size_t y_index(Vertex v) const { return v; }
  std::size_t x_index(std::size_t edge) const { return vertex_count + edge; }
  std::size_t z_index() const { return vertex_count + edges.size(); }
};

LPModel build_lp(const TemporalGraph& g);

// CPLEX LP text format.
std::string export_lp(const LPModel& m);

struct FractionalSolution {
  std::vector<Rational> y;
  std::map<Edge, Rational> x;
  Rational z;
};

struct Violation {
  std::string constraint;
  std::string detail;
};

struct FeasibilityReport {
  bool feasible = false;
  Rational objective;
  std::vector<Violation> violations;
};

// Exact check of every constraint. Throws DomainMismatch unless y covers
// exactly the vertices and x exactly the union edges of g.
FeasibilityReport check_feasible(const TemporalGraph& g, const FractionalSolution& f);

struct HarmonicInstance {
  TemporalGraph graph;
  FractionalSolution solution;
  Rational h;
};

// Gap instance with y_0 = h, y_i = h/i (i >= 1), x_e = min endpoint y,
// z = h, where h = 1/(1 + H_{n-1}).
HarmonicInstance harmonic_solution(std::size_t n);

struct GapReport {
  Rational lp_value;
  Rational integral_opt;
  Rational ratio;
};

GapReport gap_report(std::size_t n, const OracleBudget& budget = {});

}  // namespace dcs
