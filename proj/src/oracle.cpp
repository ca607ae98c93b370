#include "dcs/oracle.hpp"

#include "dcs/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <thread>

namespace dcs {

namespace {

using Mask = std::uint64_t;

void require_within(std::size_t value, std::size_t cap, const char* what) {
  if (value > cap || value >= 63) {
    throw Error(ErrorCode::BudgetExceeded,
                std::string(what) + " " + std::to_string(value) + " exceeds oracle cap " + std::to_string(cap));
  }
}

// Next mask with the same popcount (Gosper's hack).
Mask next_combination(Mask x) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Calls visit(mask) for every mask over `bits` bits with popcount `size`, in
// increasing numeric order, until visit returns true.
template <typename Visit>
bool for_each_combination(unsigned bits, unsigned size, Visit visit) {
  if (size > bits) return false;
  if (size == 0) return visit(Mask{0});
  const Mask limit = Mask{1} << bits;
  for (Mask m = (Mask{1} << size) - 1; m < limit; m = next_combination(m)) {
    if (visit(m)) return true;
  }
  return false;
}

// A candidate value num/den with the oracle tie-break.
struct Candidate {
  Mask mask = 0;
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  bool valid = false;
};

// True if a beats b: larger value, then smaller set, then lexicographically
// smaller sorted member list.
bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  const auto lhs = static_cast<unsigned __int128>(a.num) * b.den;
  const auto rhs = static_cast<unsigned __int128>(b.num) * a.den;
  if (lhs != rhs) return lhs > rhs;
  const int pa = std::popcount(a.mask), pb = std::popcount(b.mask);
  if (pa != pb) return pa < pb;
  const Mask diff = a.mask ^ b.mask;
  return diff != 0 && (a.mask & diff & (~diff + 1)) != 0;
}

class MaskEvaluator {
 public:
  MaskEvaluator(const TemporalGraph& g, const ObjectiveKind& kind) : kind_(kind), n_(g.vertex_count()) {
    adj_.assign(g.frame_count(), std::vector<Mask>(n_, 0));
    for (std::size_t t = 0; t < g.frame_count(); ++t) {
      for (const auto& e : g.frame(t)) {
        adj_[t][e.u] |= Mask{1} << e.v;
        adj_[t][e.v] |= Mask{1} << e.u;
      }
    }
    edge_counts_.resize(g.frame_count());
  }

  Candidate evaluate(Mask s) {
    const auto size = static_cast<std::uint64_t>(std::popcount(s));
    std::uint64_t min_edges = ~std::uint64_t{0}, sum_edges = 0;
    std::uint64_t min_mindeg = ~std::uint64_t{0}, sum_mindeg = 0;
    for (std::size_t t = 0; t < adj_.size(); ++t) {
      std::uint64_t degree_sum = 0, mindeg = ~std::uint64_t{0};
      for (Mask rest = s; rest; rest &= rest - 1) {
        const auto v = static_cast<unsigned>(std::countr_zero(rest));
        const auto d = static_cast<std::uint64_t>(std::popcount(adj_[t][v] & s));
        degree_sum += d;
        mindeg = std::min(mindeg, d);
      }
      const std::uint64_t edges = degree_sum / 2;
      edge_counts_[t] = edges;
      min_edges = std::min(min_edges, edges);
      sum_edges += edges;
      min_mindeg = std::min(min_mindeg, mindeg);
      sum_mindeg += mindeg;
    }
    Candidate c{s, 0, 1, true};
    switch (kind_.type) {
      case Objective::MM: c.num = min_mindeg; break;
      case Objective::AM: c.num = sum_mindeg; break;
      case Objective::MA: c.num = min_edges; c.den = size; break;
      case Objective::AA: c.num = 2 * sum_edges; c.den = size; break;
      case Objective::KMA: {
        auto kth = edge_counts_.begin() + static_cast<std::ptrdiff_t>(kind_.k - 1);
        std::nth_element(edge_counts_.begin(), kth, edge_counts_.end(), std::greater<>());
        c.num = *kth;
        c.den = size;
        break;
      }
    }
    return c;
  }

 private:
  ObjectiveKind kind_;
  std::size_t n_;
  std::vector<std::vector<Mask>> adj_;
  std::vector<std::uint64_t> edge_counts_;
};

VertexSet mask_to_set(Mask m) {
  std::vector<Vertex> members;
  for (; m; m &= m - 1) members.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return VertexSet(std::move(members));
}

// Union-find over at most 64 vertices, reset per use.
class SmallDsu {
 public:
  explicit SmallDsu(std::size_t n) : parent_(n) { reset(); }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), 0U);
    components_ = parent_.size();
  }

  unsigned find(unsigned x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --components_;
    }
  }

  std::size_t components() const { return components_; }

 private:
  std::vector<unsigned> parent_;
  std::size_t components_ = 0;
};

}  // namespace

OracleResult exact_best(const TemporalGraph& g, const ObjectiveKind& kind, const OracleBudget& budget, unsigned threads) {
  const std::size_t n = g.vertex_count();
  require_within(n, budget.max_vertices, "vertex count");
  if (kind.type == Objective::KMA && (kind.k == 0 || kind.k > g.frame_count())) {
    throw Error(ErrorCode::KOrderOutOfRange,
                "k=" + std::to_string(kind.k) + " outside [1, " + std::to_string(g.frame_count()) + "]");
  }

  const Mask last = (Mask{1} << n) - 1;
  threads = std::max(1U, threads);
  std::vector<Candidate> local(threads);
  auto scan = [&](unsigned worker) {
    MaskEvaluator eval(g, kind);
    Candidate best;
    for (Mask s = 1 + worker; s <= last; s += threads) {
      Candidate c = eval.evaluate(s);
      if (better(c, best)) best = c;
    }
    local[worker] = best;
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  Candidate best;
  for (const auto& c : local)
    if (better(c, best)) best = c;

  VertexSet solution = mask_to_set(best.mask);
  Score s = score(g, solution, kind);
  return OracleResult{std::move(solution), std::move(s)};
}

std::vector<Edge> exact_mcss(const TemporalGraph& g, const OracleBudget& budget) {
  const std::size_t n = g.vertex_count();
  const auto& edges = g.union_edges();

  SmallDsu dsu(n);
  for (std::size_t t = 0; t < g.frame_count(); ++t) {
    dsu.reset();
    for (const auto& e : g.frame(t)) dsu.unite(e.u, e.v);
    if (dsu.components() != 1) throw Error(ErrorCode::InfeasibleFrame, "frame " + std::to_string(t) + " is disconnected");
  }
  require_within(edges.size(), budget.max_union_edges, "union edge count");

  std::vector<Mask> frame_masks(g.frame_count(), 0);
  for (std::size_t t = 0; t < g.frame_count(); ++t)
    for (const auto& e : g.frame(t)) frame_masks[t] |= Mask{1} << g.union_index(e);

  auto spans_all = [&](Mask f) {
    for (Mask fm : frame_masks) {
      const Mask inside = f & fm;
      if (static_cast<std::size_t>(std::popcount(inside)) + 1 < n) return false;
      dsu.reset();
      for (Mask rest = inside; rest; rest &= rest - 1) {
        const auto& e = edges[static_cast<std::size_t>(std::countr_zero(rest))];
        dsu.unite(e.u, e.v);
      }
      if (dsu.components() != 1) return false;
    }
    return true;
  };

  const auto bits = static_cast<unsigned>(edges.size());
  Mask found = 0;
  for (unsigned size = static_cast<unsigned>(n - 1); size <= bits; ++size) {
    if (for_each_combination(bits, size, [&](Mask f) {
          if (!spans_all(f)) return false;
          found = f;
          return true;
        })) {
      break;
    }
  }

  std::vector<Edge> out;
  for (Mask rest = found; rest; rest &= rest - 1) out.push_back(edges[static_cast<std::size_t>(std::countr_zero(rest))]);
  return out;
}

std::size_t exact_minrep(const MinRepInstance& mr, const OracleBudget& budget) {
  const auto supers = mr.superedges();

  std::vector<Vertex> labels;
  for (const auto& part : mr.a_parts) labels.insert(labels.end(), part.begin(), part.end());
  for (const auto& part : mr.b_parts) labels.insert(labels.end(), part.begin(), part.end());
  std::sort(labels.begin(), labels.end());
  require_within(labels.size(), budget.max_vertices, "MinRep vertex count");
  auto bit = [&](Vertex v) {
    return Mask{1} << (std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
  };

  std::vector<std::vector<Mask>> options;
  for (const auto& s : supers) {
    if (s.edges.empty()) throw Error(ErrorCode::Uncoverable, "superedge without edges");
    std::vector<Mask> pair_masks;
    for (const auto& e : s.edges) pair_masks.push_back(bit(e.a) | bit(e.b));
    options.push_back(std::move(pair_masks));
  }

  auto covers = [&](Mask chosen) {
    return std::all_of(options.begin(), options.end(), [&](const std::vector<Mask>& opts) {
      return std::any_of(opts.begin(), opts.end(), [&](Mask m) { return (chosen & m) == m; });
    });
  };

  const auto bits = static_cast<unsigned>(labels.size());
  for (unsigned size = 0; size <= bits; ++size) {
    if (for_each_combination(bits, size, covers)) return size;
  }
  throw Error(ErrorCode::Uncoverable, "no label set covers every superedge");
}

std::size_t exact_mis(const TemporalGraph& graph, const OracleBudget& budget) {
  if (graph.frame_count() != 1) throw Error(ErrorCode::InvalidArgument, "independent set oracle takes one frame");
  const std::size_t n = graph.vertex_count();
  require_within(n, budget.max_vertices, "vertex count");
  std::vector<Mask> adj(n, 0);
  for (const auto& e : graph.frame(0)) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  auto independent = [&](Mask s) {
    for (Mask rest = s; rest; rest &= rest - 1) {
      if (adj[static_cast<std::size_t>(std::countr_zero(rest))] & s) return false;
    }
    return true;
  };
  for (auto size = static_cast<unsigned>(n); size > 0; --size) {
    if (for_each_combination(static_cast<unsigned>(n), size, independent)) return size;
  }
  return 0;
}

std::size_t exact_setcover(const SetCoverInstance& sc, const OracleBudget& budget) {
  sc.validate();
  const std::size_t m = sc.sets.size();
  require_within(m, budget.max_vertices, "set count");

  const std::size_t words = (sc.universe_size + 63) / 64;
  std::vector<std::vector<Mask>> bitsets(m, std::vector<Mask>(words, 0));
  std::vector<Mask> everything(words, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t x : sc.sets[j]) {
      bitsets[j][x / 64] |= Mask{1} << (x % 64);
      everything[x / 64] |= Mask{1} << (x % 64);
    }
  }
  for (std::size_t x = 0; x < sc.universe_size; ++x) {
    if (!(everything[x / 64] >> (x % 64) & 1)) throw Error(ErrorCode::Uncoverable, "element " + std::to_string(x) + " is in no set");
  }

  std::vector<Mask> acc(words);
  auto covers = [&](Mask chosen) {
    std::fill(acc.begin(), acc.end(), 0);
    for (Mask rest = chosen; rest; rest &= rest - 1) {
      const auto& b = bitsets[static_cast<std::size_t>(std::countr_zero(rest))];
      for (std::size_t w = 0; w < words; ++w) acc[w] |= b[w];
    }
    return acc == everything;
  };
  for (unsigned size = 0; size <= m; ++size) {
    if (for_each_combination(static_cast<unsigned>(m), size, covers)) return size;
  }
  throw Error(ErrorCode::Uncoverable, "set system does not cover its universe");
}

}  // namespace dcs
