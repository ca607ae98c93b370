// dcs: command-line front end. Every command prints one JSON report on
// stdout; diagnostics go to stderr.
//
// exit status: 0 ok, 1 usage, 2 invalid/infeasible instance, 3 budget exceeded

#include "dcs/am_solvers.hpp"
#include "dcs/error.hpp"
#include "dcs/generators.hpp"
#include "dcs/lp.hpp"
#include "dcs/ma_solvers.hpp"
#include "dcs/mcss.hpp"
#include "dcs/objectives.hpp"
#include "dcs/oracle.hpp"
#include "dcs/rational.hpp"
#include "dcs/temporal_graph.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using json = nlohmann::ordered_json;
using namespace dcs;

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kBudget = 3 };

struct Options {
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
  std::string eps = "1/2";
  std::size_t k = 1;
  std::size_t budget_n = OracleBudget{}.max_vertices;
  std::size_t budget_edges = OracleBudget{}.max_union_edges;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  // gen parameters
  std::size_t n = 0;
  double p = 0.3;
  std::size_t parts = 2;
  std::size_t part_size = 2;
  std::size_t universe = 3;
  std::size_t sets = 3;
  bool unplanted = false;
  std::string nvec;
  std::string pvec;
  std::size_t pad = 0;
  std::string eps_prime = "1/20";
  std::string planted_eps = "1/20";

  std::string alg;
  std::string objective;
  std::string set;
  std::string solution;

  OracleBudget budget() const { return OracleBudget{budget_n, budget_edges}; }
};

std::string hex_digest(const TemporalGraph& g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(content_digest(g)));
  return buf;
}

json instance_json(const TemporalGraph& g) {
  return json{{"digest", hex_digest(g)}, {"n", g.vertex_count()}, {"T", g.frame_count()}};
}

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json vertices(const VertexSet& s) { return json(s.members()); }

json edges(const std::vector<Edge>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back({e.u, e.v});
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::size_t parse_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') throw Error(ErrorCode::InvalidArgument, "not a count: " + s);
  return static_cast<std::size_t>(v);
}

TemporalGraph load(const Options& o) {
  if (o.in.empty()) throw Error(ErrorCode::InvalidArgument, "--in is required");
  return read_dcs_file(o.in);
}

json solve_json(const SolveReport& r) {
  json j{{"algorithm", r.algorithm},
         {"solution", vertices(r.solution)},
         {"score", to_string(r.score.value)},
         {"per_frame", rationals(r.score.per_frame)}};
  if (!r.frames_covered_per_iteration.empty()) j["frames_covered_per_iteration"] = r.frames_covered_per_iteration;
  if (r.zero_score_instance) j["zero_score_instance"] = true;
  j["wall_time"] = r.wall_time.count();
  return j;
}

json am_json(const std::string& name, const TemporalGraph& g, const AmResult& r, double wall) {
  json j{{"algorithm", name},
         {"solution", vertices(r.solution)},
         {"score", std::to_string(r.value)},
         {"vector", r.vector.k},
         {"vectors_visited", r.vectors_visited}};
  if (!r.solution.empty()) j["per_frame"] = rationals(score(g, r.solution, ObjectiveKind::am()).per_frame);
  j["wall_time"] = wall;
  return j;
}

json mcss_json(const McssGreedyResult& r, double wall) {
  json j{{"algorithm", "mcss-greedy"},
         {"edges", edges(r.solution.edges)},
         {"size", r.solution.size()},
         {"potentials", r.potentials}};
  if (r.phase_boundary) j["phase_boundary"] = *r.phase_boundary;
  j["wall_time"] = wall;
  return j;
}

ObjectiveKind objective_from(const std::string& name, std::size_t k) {
  if (name == "mm") return ObjectiveKind::mm();
  if (name == "ma") return ObjectiveKind::ma();
  if (name == "am") return ObjectiveKind::am();
  if (name == "aa") return ObjectiveKind::aa();
  if (name == "kma") return ObjectiveKind::kma(k);
  throw Error(ErrorCode::InvalidArgument, "unknown objective " + name);
}

// ---------------------------------------------------------------------------
// gen

json write_instance(const Options& o, const TemporalGraph& g, const NameMap* names) {
  if (o.out.empty()) throw Error(ErrorCode::InvalidArgument, "--out is required");
  write_dcs_file(o.out, g);
  json j = instance_json(g);
  j["path"] = o.out;
  if (names) {
    write_names_file(o.out + ".names", *names);
    j["names"] = o.out + ".names";
  }
  return j;
}

json gen(const std::string& kind, const Options& o) {
  json report{{"command", "gen " + kind}};
  if (kind == "gap") {
    report["instance"] = write_instance(o, gen_gap_instance(o.n), nullptr);
  } else if (kind == "minrep") {
    auto mr = gen_random_minrep(MinRepParams{o.parts, o.part_size, o.p, o.seed});
    auto red = reduce_minrep_to_ma(mr);
    report["instance"] = write_instance(o, red.graph, &red.names);
    report["seed"] = o.seed;
  } else if (kind == "mis") {
    auto source = o.in.empty() ? gen_random_graph(o.n, o.p, o.seed) : read_dcs_file(o.in);
    report["instance"] = write_instance(o, reduce_mis_to_am(source), nullptr);
    report["source"] = instance_json(source);
    if (o.in.empty()) report["seed"] = o.seed;
  } else if (kind == "planted") {
    PlantedParams params{o.n, parse_rational(o.planted_eps), !o.unplanted, o.seed};
    auto inst = gen_planted_2frame(params, o.threads);
    NameMap names(inst.graph.vertex_count());
    for (std::size_t i = 0; i < names.size(); ++i) names[i] = "a" + std::to_string(i);
    for (Vertex v : inst.clique) names[v] = "U" + std::to_string(v - o.n);
    report["instance"] = write_instance(o, inst.graph, &names);
    report["planted"] = params.planted;
    report["hidden"] = vertices(inst.hidden);
    report["seed"] = o.seed;
  } else if (kind == "recursive") {
    RecursiveParams rp;
    for (const auto& s : split(o.nvec, ',')) rp.nvec.push_back(parse_size(s));
    for (const auto& s : split(o.pvec, ',')) rp.pvec.push_back(parse_rational(s));
    rp.seed = o.seed;
    auto sample = sample_recursive_planted(rp);
    auto g = o.pad == 0 ? sample.graph
                        : gen_padded_sequence(sample.graph, o.pad, parse_rational(o.eps_prime), o.seed, 0, o.threads);
    report["instance"] = write_instance(o, g, nullptr);
    json layers = json::array();
    for (const auto& l : sample.layers) layers.push_back(vertices(l));
    report["layers"] = layers;
    report["seed"] = o.seed;
  } else if (kind == "setcover-mcss") {
    auto sc = gen_random_setcover(SetCoverParams{o.universe, o.sets, o.p, o.seed});
    auto red = reduce_setcover_to_mcss(sc);
    report["instance"] = write_instance(o, red.graph, &red.names);
    report["sets"] = sc.sets;
    report["seed"] = o.seed;
  }
  return report;
}

// ---------------------------------------------------------------------------
// solve / oracle / eval / bench

json solve(const Options& o) {
  auto g = load(o);
  json report{{"command", "solve " + o.alg}, {"instance", instance_json(g)}};
  json results = json::array();
  const auto start = std::chrono::steady_clock::now();
  if (o.alg == "greedy-ma") {
    results.push_back(solve_json(greedy_cover(g)));
  } else if (o.alg == "best-with-all") {
    results.push_back(solve_json(best_with_all(g)));
  } else if (o.alg == "composite-ma") {
    results.push_back(solve_json(composite_ma(g)));
  } else if (o.alg == "exact-am") {
    auto r = exact_am(g);
    results.push_back(am_json("exact-am", g, r, seconds_since(start)));
  } else if (o.alg == "fpt-am") {
    const Rational eps = parse_rational(o.eps);
    auto r = fpt_approx_am(g, eps);
    auto j = am_json("fpt-am", g, r, seconds_since(start));
    j["eps"] = to_string(eps);
    results.push_back(j);
  } else if (o.alg == "mcss-greedy") {
    auto r = mcss_greedy(g);
    results.push_back(mcss_json(r, seconds_since(start)));
  }
  report["results"] = results;
  return report;
}

json oracle(const Options& o) {
  auto g = load(o);
  json report{{"command", "oracle " + o.objective}, {"instance", instance_json(g)}};
  const auto start = std::chrono::steady_clock::now();
  json result;
  if (o.objective == "mcss") {
    auto best = exact_mcss(g, o.budget());
    result = json{{"objective", "mcss"}, {"edges", edges(best)}, {"size", best.size()}};
  } else {
    auto kind = objective_from(o.objective, o.k);
    auto best = exact_best(g, kind, o.budget(), o.threads);
    result = json{{"objective", to_string(kind)},
                  {"solution", vertices(best.solution)},
                  {"score", to_string(best.score.value)},
                  {"per_frame", rationals(best.score.per_frame)}};
  }
  result["wall_time"] = seconds_since(start);
  report["results"] = json::array({result});
  return report;
}

VertexSet parse_set(const std::string& text, std::size_t n) {
  std::vector<Vertex> members;
  for (const auto& s : split(text, ',')) {
    const auto v = parse_size(s);
    if (v >= n) throw Error(ErrorCode::InvalidArgument, "vertex " + s + " out of range");
    members.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(members));
}

json eval(const Options& o) {
  auto g = load(o);
  auto s = parse_set(o.set, g.vertex_count());
  json report{{"command", "eval"}, {"instance", instance_json(g)}, {"solution", vertices(s)}};
  std::vector<ObjectiveKind> kinds{ObjectiveKind::mm(), ObjectiveKind::ma(), ObjectiveKind::am(),
                                   ObjectiveKind::aa()};
  for (std::size_t k = 1; k <= g.frame_count(); ++k) kinds.push_back(ObjectiveKind::kma(k));
  json results = json::array();
  for (const auto& kind : kinds) {
    auto sc = score(g, s, kind);
    results.push_back({{"objective", to_string(kind)}, {"score", to_string(sc.value)},
                       {"per_frame", rationals(sc.per_frame)}});
  }
  report["results"] = results;
  report["densities"] = rationals(frame_densities(g, s));
  return report;
}

json bench(const Options& o) {
  auto g = load(o);
  json report{{"command", "bench"}, {"instance", instance_json(g)}};
  json results = json::array();
  for (auto* solver : {&greedy_cover, &best_with_all, &subset_search, &partition_search, &composite_ma})
    results.push_back(solve_json(solver(g)));

  auto timed = [&](const std::string& name, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
      body(start);
    } catch (const Error& e) {
      results.push_back({{"algorithm", name}, {"skipped", std::string(to_string(e.code()))}});
    }
  };
  timed("exact-am", [&](auto start) {
    auto r = exact_am(g);
    results.push_back(am_json("exact-am", g, r, seconds_since(start)));
  });
  timed("fpt-am", [&](auto start) {
    const Rational eps = parse_rational(o.eps);
    auto j = am_json("fpt-am", g, fpt_approx_am(g, eps), seconds_since(start));
    j["eps"] = to_string(eps);
    results.push_back(j);
  });
  timed("mcss-greedy", [&](auto start) { results.push_back(mcss_json(mcss_greedy(g), seconds_since(start))); });
  for (auto kind : {ObjectiveKind::ma(), ObjectiveKind::am()}) {
    const std::string name = "oracle-" + to_string(kind);
    timed(name, [&](auto start) {
      auto best = exact_best(g, kind, o.budget(), o.threads);
      results.push_back({{"algorithm", name},
                         {"solution", vertices(best.solution)},
                         {"score", to_string(best.score.value)},
                         {"wall_time", seconds_since(start)}});
    });
  }
  report["results"] = results;
  return report;
}

// ---------------------------------------------------------------------------
// lp

// Solution file lines: "y <v> <q>", "x <u> <v> <q>", "z <q>"; '#' comments.
FractionalSolution read_solution(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  FractionalSolution f;
  f.y.assign(n, 0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    std::string a, b, value;
    if (tag == "y" && ls >> a >> value) {
      const auto v = parse_size(a);
      if (v >= n) throw ParseError(ErrorCode::DomainMismatch, lineno, "y index out of range");
      f.y[v] = parse_rational(value);
    } else if (tag == "x" && ls >> a >> b >> value) {
      f.x[make_edge(static_cast<Vertex>(parse_size(a)), static_cast<Vertex>(parse_size(b)))] = parse_rational(value);
    } else if (tag == "z" && ls >> value) {
      f.z = parse_rational(value);
    } else {
      throw ParseError(ErrorCode::MalformedLine, lineno, "expected y/x/z entry");
    }
  }
  return f;
}

json lp(const std::string& verb, const Options& o) {
  json report{{"command", "lp " + verb}};
  if (verb == "export") {
    auto g = load(o);
    if (o.out.empty()) throw Error(ErrorCode::InvalidArgument, "--out is required");
    auto model = build_lp(g);
    std::ofstream out(o.out);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out);
    out << export_lp(model);
    report["instance"] = instance_json(g);
    report["path"] = o.out;
    report["variables"] = model.variables.size();
    report["constraints"] = model.constraints.size();
  } else if (verb == "check") {
    const bool harmonic = o.solution.empty();
    auto h = harmonic ? harmonic_solution(o.n) : HarmonicInstance{load(o), {}, 0};
    const auto& g = h.graph;
    const auto f = harmonic ? h.solution : read_solution(o.solution, g.vertex_count());
    if (harmonic) report["source"] = "harmonic";
    auto r = check_feasible(g, f);
    report["instance"] = instance_json(g);
    report["feasible"] = r.feasible;
    report["objective"] = to_string(r.objective);
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back({{"constraint", v.constraint}, {"detail", v.detail}});
    report["violations"] = violations;
  } else if (verb == "gap") {
    auto r = gap_report(o.n, o.budget());
    report["n"] = o.n;
    report["lp_value"] = to_string(r.lp_value);
    report["integral_opt"] = to_string(r.integral_opt);
    report["ratio"] = to_string(r.ratio);
  }
  return report;
}

int exit_for(ErrorCode code) { return code == ErrorCode::BudgetExceeded ? kBudget : kInvalid; }

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Densest common subgraph toolkit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c) {
    c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget-n", o.budget_n, "oracle cap on vertices");
    c->add_option("--budget-edges", o.budget_edges, "oracle cap on union edges");
  };

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> gens;
  for (const char* kind : {"gap", "minrep", "mis", "planted", "recursive", "setcover-mcss"}) {
    auto* c = gen_cmd->add_subcommand(kind);
    c->add_option("--out", o.out, ".dcs output path")->required();
    c->add_option("--seed", o.seed);
    add_common(c);
    gens.emplace_back(kind, c);
  }
  gens[0].second->add_option("--n", o.n)->required();
  gens[1].second->add_option("--parts", o.parts);
  gens[1].second->add_option("--part-size", o.part_size);
  gens[1].second->add_option("--p", o.p, "edge probability");
  gens[2].second->add_option("--in", o.in, "single-frame source graph");
  gens[2].second->add_option("--n", o.n, "random source size");
  gens[2].second->add_option("--p", o.p, "random source edge probability");
  gens[3].second->add_option("--n", o.n)->required();
  gens[3].second->add_option("--eps", o.planted_eps);
  gens[3].second->add_flag("--unplanted", o.unplanted);
  gens[4].second->add_option("--nvec", o.nvec, "comma-separated decreasing sizes")->required();
  gens[4].second->add_option("--pvec", o.pvec, "comma-separated log-densities")->required();
  gens[4].second->add_option("--pad", o.pad, "padding frames to append");
  gens[4].second->add_option("--eps-prime", o.eps_prime);
  gens[5].second->add_option("--universe", o.universe);
  gens[5].second->add_option("--sets", o.sets);
  gens[5].second->add_option("--p", o.p, "membership probability");

  auto* solve_cmd = app.add_subcommand("solve", "run a solver");
  solve_cmd->add_option("--alg", o.alg)
      ->required()
      ->check(CLI::IsMember({"greedy-ma", "best-with-all", "composite-ma", "exact-am", "fpt-am", "mcss-greedy"}));
  solve_cmd->add_option("--in", o.in)->required();
  solve_cmd->add_option("--eps", o.eps);
  add_common(solve_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth");
  oracle_cmd->add_option("--objective", o.objective)
      ->required()
      ->check(CLI::IsMember({"mm", "ma", "am", "aa", "kma", "mcss"}));
  oracle_cmd->add_option("--in", o.in)->required();
  oracle_cmd->add_option("--k", o.k, "order for kma");
  add_budget(oracle_cmd);
  add_common(oracle_cmd);

  auto* lp_cmd = app.add_subcommand("lp", "LP relaxation tools");
  lp_cmd->require_subcommand(1);
  auto* lp_export = lp_cmd->add_subcommand("export");
  lp_export->add_option("--in", o.in)->required();
  lp_export->add_option("--out", o.out)->required();
  auto* lp_check = lp_cmd->add_subcommand("check");
  lp_check->add_option("--in", o.in);
  lp_check->add_option("--solution", o.solution, "y/x/z solution file");
  lp_check->add_option("--n", o.n, "check the harmonic solution on the gap instance of size n");
  auto* lp_gap = lp_cmd->add_subcommand("gap");
  lp_gap->add_option("--n", o.n)->required();
  add_budget(lp_gap);

  auto* eval_cmd = app.add_subcommand("eval", "score a vertex set under every objective");
  eval_cmd->add_option("--in", o.in)->required();
  eval_cmd->add_option("--set", o.set, "comma-separated vertices")->required();

  auto* bench_cmd = app.add_subcommand("bench", "run every solver on one instance");
  bench_cmd->add_option("--in", o.in)->required();
  bench_cmd->add_option("--eps", o.eps);
  add_budget(bench_cmd);
  add_common(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    json report;
    if (gen_cmd->parsed()) {
      for (const auto& [kind, c] : gens)
        if (c->parsed()) report = gen(kind, o);
    } else if (solve_cmd->parsed()) {
      report = solve(o);
    } else if (oracle_cmd->parsed()) {
      report = oracle(o);
    } else if (lp_cmd->parsed()) {
      if (lp_check->parsed() && o.solution.empty() && o.n == 0) {
        std::cerr << "lp check needs --in with --solution, or --n\n";
        return kUsage;
      }
      report = lp(lp_export->parsed() ? "export" : lp_check->parsed() ? "check" : "gap", o);
    } else if (eval_cmd->parsed()) {
      report = eval(o);
    } else if (bench_cmd->parsed()) {
      report = bench(o);
    }
    report["status"] = "ok";
    std::cout << report.dump(2) << '\n';
    return kOk;
  } catch (const Error& e) {
    std::cerr << "dcs: " << e.what() << '\n';
    std::cout << json{{"status", std::string(to_string(e.code()))}, {"message", e.what()}}.dump(2) << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "dcs: " << e.what() << '\n';
    return kInvalid;
  }
}
