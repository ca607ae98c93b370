#include "dcs/lp.hpp"

#include "dcs/error.hpp"
#include "dcs/generators.hpp"

#include <algorithm>
#include <sstream>

namespace dcs {

namespace {

std::string edge_suffix(const Edge& e) { return std::to_string(e.u) + "_" + std::to_string(e.v); }

std::string format_coefficient(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  std::ostringstream os;
  os.precision(17);
  os << c.get_d();
  return os.str();
}

}  // namespace

LPModel build_lp(const TemporalGraph& g) {
  LPModel m;
  m.vertex_count = g.vertex_count();
  m.frame_count = g.frame_count();
  m.edges = g.union_edges();

  for (std::size_t v = 0; v < m.vertex_count; ++v) m.variables.push_back("y" + std::to_string(v));
  for (const auto& e : m.edges) m.variables.push_back("x_" + edge_suffix(e));
  m.variables.push_back("z");

  Constraint norm{"norm", {}, Sense::Equal, Rational(1)};
  for (std::size_t v = 0; v < m.vertex_count; ++v) norm.terms.push_back({m.y_index(static_cast<Vertex>(v)), Rational(1)});
  m.constraints.push_back(std::move(norm));

  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    const auto& e = m.edges[i];
    m.constraints.push_back(
        {"cap_" + edge_suffix(e) + "_u", {{m.x_index(i), Rational(1)}, {m.y_index(e.u), Rational(-1)}}, Sense::LessEqual, Rational(0)});
    m.constraints.push_back(
        {"cap_" + edge_suffix(e) + "_v", {{m.x_index(i), Rational(1)}, {m.y_index(e.v), Rational(-1)}}, Sense::LessEqual, Rational(0)});
  }

  for (std::size_t t = 0; t < m.frame_count; ++t) {
    Constraint c{"frame_" + std::to_string(t), {{m.z_index(), Rational(1)}}, Sense::LessEqual, Rational(0)};
    for (const auto& e : g.frame(t)) c.terms.push_back({m.x_index(g.union_index(e)), Rational(-1)});
    m.constraints.push_back(std::move(c));
  }
  return m;
}

std::string export_lp(const LPModel& m) {
  std::ostringstream out;
  out << "\\ Densest common subgraph LP relaxation: n=" << m.vertex_count << " T=" << m.frame_count
      << " |E|=" << m.edges.size() << "\n";
  out << "Maximize\n obj: z\nSubject To\n";
  for (const auto& c : m.constraints) {
    out << " " << c.name << ":";
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
      if (i > 0 && i % 8 == 0) out << "\n   ";
      const auto& term = c.terms[i];
      const bool negative = term.coefficient < 0;
      const Rational magnitude = negative ? Rational(-term.coefficient) : term.coefficient;
      if (i == 0) {
        out << (negative ? " -" : "");
      } else {
        out << (negative ? " -" : " +");
      }
      out << " ";
      if (magnitude != 1) out << format_coefficient(magnitude) << " ";
      out << m.variables[term.variable];
    }
    out << (c.sense == Sense::Equal ? " = " : " <= ") << format_coefficient(c.rhs) << "\n";
  }
  out << "Bounds\n";
  for (std::size_t i = 0; i + 1 < m.variables.size(); ++i) out << " " << m.variables[i] << " >= 0\n";
  out << " z free\nEnd\n";
  return out.str();
}

FeasibilityReport check_feasible(const TemporalGraph& g, const FractionalSolution& f) {
  const auto& edges = g.union_edges();
  if (f.y.size() != g.vertex_count()) {
    throw Error(ErrorCode::DomainMismatch,
                "y has " + std::to_string(f.y.size()) + " entries for " + std::to_string(g.vertex_count()) + " vertices");
  }
  if (f.x.size() != edges.size() ||
      !std::equal(edges.begin(), edges.end(), f.x.begin(), [](const Edge& e, const auto& kv) { return e == kv.first; })) {
    throw Error(ErrorCode::DomainMismatch, "x must be indexed by exactly the union edges");
  }

  FeasibilityReport r;
  auto violate = [&](std::string name, std::string detail) { r.violations.push_back({std::move(name), std::move(detail)}); };

  Rational total = 0;
  for (std::size_t v = 0; v < f.y.size(); ++v) {
    if (f.y[v] < 0) violate("nonneg_y" + std::to_string(v), "y" + std::to_string(v) + " = " + to_string(f.y[v]));
    total += f.y[v];
  }
  if (total != 1) violate("norm", "sum of y = " + to_string(total));

  for (const auto& [e, value] : f.x) {
    const auto name = edge_suffix(e);
    if (value < 0) violate("nonneg_x_" + name, "x_" + name + " = " + to_string(value));
    if (value > f.y[e.u]) violate("cap_" + name + "_u", "x_" + name + " = " + to_string(value) + " > y" + std::to_string(e.u));
    if (value > f.y[e.v]) violate("cap_" + name + "_v", "x_" + name + " = " + to_string(value) + " > y" + std::to_string(e.v));
  }

  for (std::size_t t = 0; t < g.frame_count(); ++t) {
    Rational mass = 0;
    for (const auto& e : g.frame(t)) mass += f.x.at(e);
    if (f.z > mass) {
      violate("frame_" + std::to_string(t), "z = " + to_string(f.z) + " exceeds frame mass " + to_string(mass));
    }
  }

  r.feasible = r.violations.empty();
  r.objective = f.z;
  return r;
}

HarmonicInstance harmonic_solution(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "harmonic solution needs n >= 2");
  HarmonicInstance out{gen_gap_instance(n), {}, {}};
  out.h = 1 / (1 + harmonic(n - 1));
  out.h.canonicalize();

  auto& f = out.solution;
  f.y.resize(n);
  f.y[0] = out.h;
  for (std::size_t i = 1; i < n; ++i) {
    f.y[i] = out.h / Rational(mpz_class(static_cast<unsigned long>(i)));
    f.y[i].canonicalize();
  }
  for (const auto& e : out.graph.union_edges()) f.x.emplace(e, std::min(f.y[e.u], f.y[e.v]));
  f.z = out.h;
  return out;
}

GapReport gap_report(std::size_t n, const OracleBudget& budget) {
  auto inst = harmonic_solution(n);
  auto check = check_feasible(inst.graph, inst.solution);
  if (!check.feasible) throw Error(ErrorCode::InvalidArgument, "harmonic solution failed its feasibility check");
  auto opt = exact_best(inst.graph, ObjectiveKind::ma(), budget);
  GapReport r{check.objective, opt.score.value, {}};
  r.ratio = r.lp_value / r.integral_opt;
  r.ratio.canonicalize();
  return r;
}

}  // namespace dcs
