#pragma once

#include "dcs/rational.hpp"
#include "dcs/temporal_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dcs {

// Label per vertex index, written next to an instance as "<index> <label>" lines.
using NameMap = std::vector<std::string>;

std::string serialize_names(const NameMap& names);
void write_names_file(const std::string& path, const NameMap& names);

// ---------------------------------------------------------------------------
// Source-problem instances

struct BipartiteEdge {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const BipartiteEdge&, const BipartiteEdge&) = default;
};

// MinRep (minimisation Label Cover). Vertices are [0, vertex_count); the A
// and B parts partition (a subset of) them.
struct MinRepInstance {
  std::size_t vertex_count = 0;
  std::vector<std::vector<Vertex>> a_parts;
  std::vector<std::vector<Vertex>> b_parts;
  // Each edge joins an A-side vertex (a) to a B-side vertex (b).
  std::vector<BipartiteEdge> edges;

  struct Superedge {
    std::size_t a_part = 0;
    std::size_t b_part = 0;
    std::vector<BipartiteEdge> edges;
  };

  // Throws InvalidArgument when parts overlap or an edge does not cross A to B.
  void validate() const;
  // Superedges sorted by (a_part, b_part), each with its sorted edge list.
  std::vector<Superedge> superedges() const;
};

struct SetCoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> sets;

  void validate() const;
};

// ---------------------------------------------------------------------------
// Deterministic constructions

// T = n-1 frames; frame k-1 (k = 1..n-1) is the star joining vertex k to
// every smaller vertex.
TemporalGraph gen_gap_instance(std::size_t n);

struct Reduction {
  TemporalGraph graph;
  NameMap names;
};

// Frame 0 holds the single edge (u, v) between two fresh vertices; frame i
// holds exactly the edges of the i-th superedge.
Reduction reduce_minrep_to_ma(const MinRepInstance& mr);

// One frame per vertex v: v's neighbours are isolated and the remaining
// vertices form a star centred at v. Input must be a single non-complete frame.
TemporalGraph reduce_mis_to_am(const TemporalGraph& graph);

// Vertices s_1..s_m, x, y. Frame 0 is the path x,y,s_1..s_m; frame i is the
// path y,s_1..s_m plus (s_j, x) for every set containing element i.
Reduction reduce_setcover_to_mcss(const SetCoverInstance& sc);

// Universe = hyperedges; one set per hypergraph vertex holding its incident
// hyperedges. Throws NotUniform unless every hyperedge has the same size k >= 2
// with distinct vertices.
SetCoverInstance ekvc_to_setcover(std::size_t vertex_count, const std::vector<std::vector<Vertex>>& hyperedges);

// ---------------------------------------------------------------------------
// Random constructions (pure functions of parameters and seed)

// G(n, p) drawn from one sub-stream, pairs visited in (u, v) order.
std::vector<Edge> sample_gnp_edges(std::uint32_t n, double p, std::uint64_t seed, std::uint64_t stream);

struct PlantedParams {
  std::size_t n = 16;
  Rational eps = Rational(1, 20);
  bool planted = true;
  std::uint64_t seed = 0;

  void validate() const;
};

struct PlantedInstance {
  TemporalGraph graph;
  // The ceil(n^(1/4)) appended clique vertices.
  VertexSet clique;
  // The ceil(sqrt(n)) ambient vertices chosen for planting. Drawn in both the
  // planted and unplanted case so the same witness construction applies.
  VertexSet hidden;
};

// Frame 0 is a clique on the appended vertices; frame 1 is G(n, n^-1/2) on the
// ambient vertices, with G(|hidden|, n^(-1/4-eps)) unioned onto the hidden
// subset when planted.
PlantedInstance gen_planted_2frame(const PlantedParams& p, unsigned threads = 1);

struct RecursiveParams {
  std::vector<std::size_t> nvec;
  std::vector<Rational> pvec;
  std::uint64_t seed = 0;

  void validate() const;
};

struct RecursiveSample {
  TemporalGraph graph;
  // layers[i] is the vertex set carrying level i+1 of the recursion
  // (layers[0] = all vertices).
  std::vector<VertexSet> layers;
};

RecursiveSample sample_recursive_planted(const RecursiveParams& rp);

// Appends pad_count i.i.d. G(ambient, ambient^(-3 eps')) frames on vertices
// [0, ambient); ambient = 0 means all of base's vertices.
TemporalGraph gen_padded_sequence(const TemporalGraph& base, std::size_t pad_count, const Rational& eps_prime,
                                  std::uint64_t seed, std::size_t ambient = 0, unsigned threads = 1);

// Default padding count: min(n^2, 10^4).
std::size_t default_pad_count(std::size_t n);

// Random single-frame G(n, p).
TemporalGraph gen_random_graph(std::size_t n, double p, std::uint64_t seed);

struct MinRepParams {
  std::size_t parts = 2;      // k parts on each side
  std::size_t part_size = 2;  // vertices per part
  double edge_prob = 0.3;
  std::uint64_t seed = 0;
};

// Random MinRep instance with at least one superedge. All A-side vertices
// are numbered before the B side.
MinRepInstance gen_random_minrep(const MinRepParams& params);

struct SetCoverParams {
  std::size_t universe = 3;
  std::size_t sets = 3;
  double membership_prob = 0.4;
  std::uint64_t seed = 0;
};

// Random set system in which every element belongs to at least one set.
SetCoverInstance gen_random_setcover(const SetCoverParams& params);

}  // namespace dcs
