#include "dcs/generators.hpp"

#include "dcs/error.hpp"
#include "dcs/random.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <thread>

namespace dcs {

std::string serialize_names(const NameMap& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += std::to_string(i) + " " + names[i] + "\n";
  return out;
}

void write_names_file(const std::string& path, const NameMap& names) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << serialize_names(names);
}

// ---------------------------------------------------------------------------

void MinRepInstance::validate() const {
  std::vector<int> side(vertex_count, 0);  // 0 = none, 1 = A, 2 = B
  auto claim = [&](const std::vector<std::vector<Vertex>>& parts, int tag) {
    for (const auto& part : parts) {
      for (Vertex v : part) {
        if (v >= vertex_count) throw Error(ErrorCode::InvalidArgument, "MinRep vertex " + std::to_string(v) + " out of range");
        if (side[v] != 0) throw Error(ErrorCode::InvalidArgument, "MinRep parts overlap at vertex " + std::to_string(v));
        side[v] = tag;
      }
    }
  };
  claim(a_parts, 1);
  claim(b_parts, 2);
  for (const auto& e : edges) {
    if (e.a >= vertex_count || e.b >= vertex_count || side[e.a] != 1 || side[e.b] != 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "MinRep edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") does not cross from A to B");
    }
  }
}

std::vector<MinRepInstance::Superedge> MinRepInstance::superedges() const {
  validate();
  std::vector<std::size_t> part_of(vertex_count, 0);
  for (std::size_t i = 0; i < a_parts.size(); ++i)
    for (Vertex v : a_parts[i]) part_of[v] = i;
  for (std::size_t j = 0; j < b_parts.size(); ++j)
    for (Vertex v : b_parts[j]) part_of[v] = j;

  std::map<std::pair<std::size_t, std::size_t>, std::vector<BipartiteEdge>> grouped;
  for (const auto& e : edges) grouped[{part_of[e.a], part_of[e.b]}].push_back(e);

  std::vector<Superedge> out;
  for (auto& [key, list] : grouped) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    out.push_back(Superedge{key.first, key.second, std::move(list)});
  }
  return out;
}

void SetCoverInstance::validate() const {
  for (std::size_t j = 0; j < sets.size(); ++j) {
    std::vector<std::size_t> sorted = sets[j];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::InvalidArgument, "set " + std::to_string(j) + " lists an element twice");
    }
    if (!sorted.empty() && sorted.back() >= universe_size) {
      throw Error(ErrorCode::InvalidArgument, "set " + std::to_string(j) + " has an element outside the universe");
    }
  }
}

// ---------------------------------------------------------------------------

TemporalGraph gen_gap_instance(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "gap instance needs n >= 2");
  std::vector<std::vector<Edge>> frames(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < k; ++i) frames[k - 1].push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(k)});
  }
  return TemporalGraph(n, std::move(frames));
}

Reduction reduce_minrep_to_ma(const MinRepInstance& mr) {
  auto supers = mr.superedges();
  if (supers.empty()) throw Error(ErrorCode::NoSuperedges, "MinRep instance has no superedges");

  const auto u = static_cast<Vertex>(mr.vertex_count);
  const auto v = static_cast<Vertex>(mr.vertex_count + 1);

  NameMap names(mr.vertex_count + 2);
  for (std::size_t i = 0; i < names.size(); ++i) names[i] = "v" + std::to_string(i);
  for (std::size_t i = 0; i < mr.a_parts.size(); ++i)
    for (Vertex w : mr.a_parts[i]) names[w] = "A" + std::to_string(i) + "." + std::to_string(w);
  for (std::size_t j = 0; j < mr.b_parts.size(); ++j)
    for (Vertex w : mr.b_parts[j]) names[w] = "B" + std::to_string(j) + "." + std::to_string(w);
  names[u] = "u";
  names[v] = "v";

  std::vector<std::vector<Edge>> frames;
  frames.push_back({Edge{u, v}});
  for (const auto& s : supers) {
    std::vector<Edge> frame;
    for (const auto& e : s.edges) frame.push_back(make_edge(e.a, e.b));
    frames.push_back(std::move(frame));
  }
  return Reduction{TemporalGraph(mr.vertex_count + 2, std::move(frames)), std::move(names)};
}

TemporalGraph reduce_mis_to_am(const TemporalGraph& graph) {
  if (graph.frame_count() != 1) throw Error(ErrorCode::InvalidArgument, "MIS reduction takes a single-frame graph");
  const std::size_t n = graph.vertex_count();
  if (graph.frame(0).size() == n * (n - 1) / 2) {
    throw Error(ErrorCode::CompleteGraph, "independent set is trivial on a complete graph");
  }
  std::vector<std::vector<Edge>> frames(n);
  for (Vertex c = 0; c < n; ++c) {
    for (Vertex w = 0; w < n; ++w) {
      if (w != c && !graph.has_edge(0, c, w)) frames[c].push_back(make_edge(c, w));
    }
  }
  return TemporalGraph(n, std::move(frames));
}

Reduction reduce_setcover_to_mcss(const SetCoverInstance& sc) {
  sc.validate();
  const std::size_t m = sc.sets.size();
  std::vector<std::vector<Vertex>> containing(sc.universe_size);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t x : sc.sets[j]) containing[x].push_back(static_cast<Vertex>(j));
  for (std::size_t i = 0; i < sc.universe_size; ++i) {
    if (containing[i].empty()) throw Error(ErrorCode::Uncoverable, "element " + std::to_string(i) + " is in no set");
  }

  const auto x = static_cast<Vertex>(m);
  const auto y = static_cast<Vertex>(m + 1);
  std::vector<Edge> spine;  // path y, s_1, ..., s_m
  if (m > 0) spine.push_back(make_edge(y, 0));
  for (Vertex j = 1; j < m; ++j) spine.push_back(make_edge(j - 1, j));

  std::vector<std::vector<Edge>> frames;
  frames.push_back(spine);
  frames.front().push_back(make_edge(x, y));
  for (std::size_t i = 0; i < sc.universe_size; ++i) {
    auto frame = spine;
    for (Vertex j : containing[i]) frame.push_back(make_edge(j, x));
    frames.push_back(std::move(frame));
  }

  NameMap names(m + 2);
  for (std::size_t j = 0; j < m; ++j) names[j] = "s" + std::to_string(j + 1);
  names[x] = "x";
  names[y] = "y";
  return Reduction{TemporalGraph(m + 2, std::move(frames)), std::move(names)};
}

SetCoverInstance ekvc_to_setcover(std::size_t vertex_count, const std::vector<std::vector<Vertex>>& hyperedges) {
  SetCoverInstance sc;
  sc.universe_size = hyperedges.size();
  sc.sets.resize(vertex_count);
  const std::size_t k = hyperedges.empty() ? 2 : hyperedges.front().size();
  if (k < 2) throw Error(ErrorCode::NotUniform, "hyperedges need at least two vertices");
  for (std::size_t e = 0; e < hyperedges.size(); ++e) {
    auto members = hyperedges[e];
    std::sort(members.begin(), members.end());
    if (members.size() != k || std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw Error(ErrorCode::NotUniform, "hyperedge " + std::to_string(e) + " does not have " + std::to_string(k) +
                                             " distinct vertices");
    }
    for (Vertex v : members) {
      if (v >= vertex_count) throw Error(ErrorCode::InvalidArgument, "hyperedge vertex out of range");
      sc.sets[v].push_back(e);
    }
  }
  return sc;
}

// ---------------------------------------------------------------------------

namespace {

// Smallest r with r^degree >= n.
std::size_t ceil_root(std::size_t n, unsigned degree) {
  auto power_at_least = [&](std::size_t r) {
    unsigned __int128 p = 1;
    for (unsigned i = 0; i < degree; ++i) {
      p *= r;
      if (p >= n) return true;
    }
    return p >= n;
  };
  std::size_t r = static_cast<std::size_t>(std::pow(static_cast<double>(n), 1.0 / degree));
  while (r > 0 && power_at_least(r - 1)) --r;
  while (!power_at_least(r)) ++r;
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

void merge_edges(std::vector<Edge>& into, const std::vector<Edge>& more) {
  into.insert(into.end(), more.begin(), more.end());
  std::sort(into.begin(), into.end());
  into.erase(std::unique(into.begin(), into.end()), into.end());
}

template <typename Job>
void run_parallel(std::size_t jobs, unsigned threads, Job job) {
  threads = std::max(1U, threads);
  if (threads == 1 || jobs < 2) {
    for (std::size_t i = 0; i < jobs; ++i) job(i);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t count = std::min<std::size_t>(threads, jobs);
  for (std::size_t w = 0; w < count; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < jobs; i += count) job(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

std::vector<Edge> sample_gnp_edges(std::uint32_t n, double p, std::uint64_t seed, std::uint64_t stream) {
  std::vector<Edge> edges;
  if (p <= 0.0 || n < 2) return edges;
  if (p >= 1.0) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
    return edges;
  }
  auto rng = SplitMix64::stream(seed, stream);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back(Edge{u, v});
  return edges;
}

void PlantedParams::validate() const {
  if (n < 16) throw Error(ErrorCode::InvalidArgument, "planted construction needs n >= 16");
  if (eps <= 0 || eps >= Rational(1, 4)) throw Error(ErrorCode::InvalidArgument, "eps must lie in (0, 1/4)");
}

PlantedInstance gen_planted_2frame(const PlantedParams& p, unsigned threads) {
  p.validate();
  const std::size_t clique_size = ceil_root(p.n, 4);
  const std::size_t hidden_size = ceil_root(p.n, 2);
  const auto ambient = static_cast<std::uint32_t>(p.n);

  auto hidden = SplitMix64::stream(p.seed, SplitMix64::kAuxiliaryBase).sample_subset(ambient, static_cast<std::uint32_t>(hidden_size));

  std::vector<std::vector<Edge>> frames(2);
  run_parallel(2, threads, [&](std::size_t t) {
    if (t == 0) {
      for (std::size_t i = 0; i < clique_size; ++i)
        for (std::size_t j = i + 1; j < clique_size; ++j)
          frames[0].push_back(Edge{static_cast<Vertex>(p.n + i), static_cast<Vertex>(p.n + j)});
      return;
    }
    frames[1] = sample_gnp_edges(ambient, 1.0 / std::sqrt(static_cast<double>(p.n)), p.seed, 1);
    if (p.planted) {
      const double inner = std::pow(static_cast<double>(p.n), -0.25 - to_double(p.eps));
      auto local = sample_gnp_edges(static_cast<std::uint32_t>(hidden.size()), inner, p.seed, SplitMix64::kAuxiliaryBase + 1);
      std::vector<Edge> mapped;
      for (const auto& e : local) mapped.push_back(make_edge(hidden[e.u], hidden[e.v]));
      merge_edges(frames[1], mapped);
    }
  });

  std::vector<Vertex> clique;
  for (std::size_t i = 0; i < clique_size; ++i) clique.push_back(static_cast<Vertex>(p.n + i));
  return PlantedInstance{TemporalGraph(p.n + clique_size, std::move(frames)), VertexSet(std::move(clique)),
                         VertexSet(std::move(hidden))};
}

void RecursiveParams::validate() const {
  if (nvec.empty() || nvec.size() != pvec.size()) {
    throw Error(ErrorCode::InvalidArgument, "size and log-density vectors must be nonempty and equally long");
  }
  for (std::size_t i = 0; i < nvec.size(); ++i) {
    if (nvec[i] == 0 || (i > 0 && nvec[i] >= nvec[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "size vector must be strictly decreasing and positive");
    }
    if (pvec[i] <= 0 || pvec[i] > 1) throw Error(ErrorCode::InvalidArgument, "log-densities must lie in (0, 1]");
  }
}

RecursiveSample sample_recursive_planted(const RecursiveParams& rp) {
  rp.validate();
  std::vector<Edge> edges;
  std::vector<VertexSet> layers;
  std::vector<Vertex> mapping(rp.nvec[0]);
  for (std::size_t i = 0; i < mapping.size(); ++i) mapping[i] = static_cast<Vertex>(i);

  for (std::size_t level = 0; level < rp.nvec.size(); ++level) {
    const auto size = static_cast<std::uint32_t>(rp.nvec[level]);
    if (level > 0) {
      auto chosen = SplitMix64::stream(rp.seed, SplitMix64::kAuxiliaryBase + level)
                        .sample_subset(static_cast<std::uint32_t>(mapping.size()), size);
      std::vector<Vertex> next;
      next.reserve(chosen.size());
      for (auto idx : chosen) next.push_back(mapping[idx]);
      mapping = std::move(next);
    }
    layers.emplace_back(mapping);
    const double prob = std::pow(static_cast<double>(size), to_double(rp.pvec[level]) - 1.0);
    for (const auto& e : sample_gnp_edges(size, prob, rp.seed, level)) edges.push_back(make_edge(mapping[e.u], mapping[e.v]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return RecursiveSample{TemporalGraph(rp.nvec[0], {std::move(edges)}), std::move(layers)};
}

std::size_t default_pad_count(std::size_t n) { return std::min<std::size_t>(n * n, 10000); }

TemporalGraph gen_padded_sequence(const TemporalGraph& base, std::size_t pad_count, const Rational& eps_prime,
                                  std::uint64_t seed, std::size_t ambient, unsigned threads) {
  if (eps_prime < 0) throw Error(ErrorCode::InvalidArgument, "eps' must be nonnegative");
  if (ambient == 0) ambient = base.vertex_count();
  if (ambient > base.vertex_count()) throw Error(ErrorCode::InvalidArgument, "ambient range exceeds the vertex count");

  std::vector<std::vector<Edge>> frames;
  frames.reserve(base.frame_count() + pad_count);
  for (std::size_t t = 0; t < base.frame_count(); ++t) {
    auto f = base.frame(t);
    frames.emplace_back(f.begin(), f.end());
  }
  frames.resize(base.frame_count() + pad_count);

  const double prob = std::pow(static_cast<double>(ambient), -3.0 * to_double(eps_prime));
  const std::size_t first = base.frame_count();
  run_parallel(pad_count, threads, [&](std::size_t j) {
    frames[first + j] = sample_gnp_edges(static_cast<std::uint32_t>(ambient), prob, seed, first + j);
  });
  return TemporalGraph(base.vertex_count(), std::move(frames));
}

TemporalGraph gen_random_graph(std::size_t n, double p, std::uint64_t seed) {
  return TemporalGraph(n, {sample_gnp_edges(static_cast<std::uint32_t>(n), p, seed, 0)});
}

MinRepInstance gen_random_minrep(const MinRepParams& params) {
  if (params.parts == 0 || params.part_size == 0) throw Error(ErrorCode::InvalidArgument, "MinRep needs nonempty parts");
  MinRepInstance mr;
  const std::size_t side = params.parts * params.part_size;
  mr.vertex_count = 2 * side;
  for (std::size_t i = 0; i < params.parts; ++i) {
    std::vector<Vertex> a, b;
    for (std::size_t j = 0; j < params.part_size; ++j) {
      a.push_back(static_cast<Vertex>(i * params.part_size + j));
      b.push_back(static_cast<Vertex>(side + i * params.part_size + j));
    }
    mr.a_parts.push_back(std::move(a));
    mr.b_parts.push_back(std::move(b));
  }
  auto rng = SplitMix64::stream(params.seed, 0);
  for (Vertex a = 0; a < side; ++a)
    for (Vertex b = 0; b < side; ++b)
      if (rng.bernoulli(params.edge_prob)) mr.edges.push_back(BipartiteEdge{a, static_cast<Vertex>(side + b)});
  if (mr.edges.empty()) mr.edges.push_back(BipartiteEdge{0, static_cast<Vertex>(side)});
  return mr;
}

SetCoverInstance gen_random_setcover(const SetCoverParams& params) {
  if (params.sets == 0 && params.universe > 0) throw Error(ErrorCode::InvalidArgument, "nonempty universe needs sets");
  SetCoverInstance sc;
  sc.universe_size = params.universe;
  sc.sets.resize(params.sets);
  auto rng = SplitMix64::stream(params.seed, 0);
  std::vector<bool> covered(params.universe, false);
  for (std::size_t j = 0; j < params.sets; ++j) {
    for (std::size_t x = 0; x < params.universe; ++x) {
      if (rng.bernoulli(params.membership_prob)) {
        sc.sets[j].push_back(x);
        covered[x] = true;
      }
    }
  }
  auto fix = SplitMix64::stream(params.seed, SplitMix64::kAuxiliaryBase);
  for (std::size_t x = 0; x < params.universe; ++x) {
    if (!covered[x]) {
      auto& set = sc.sets[fix.below(params.sets)];
      set.insert(std::upper_bound(set.begin(), set.end(), x), x);
    }
  }
  return sc;
}

}  // namespace dcs
