#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcs {

using Vertex = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Orders the endpoints; throws SelfLoop when a == b.
Edge make_edge(Vertex a, Vertex b);

// A candidate solution: sorted, duplicate-free vertex list.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  static VertexSet all(std::size_t n);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;

  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Lexicographic comparison of the sorted member lists.
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& s);

struct FrameStats {
  std::uint64_t edge_count = 0;
  std::uint32_t min_degree = 0;

  friend bool operator==(const FrameStats&, const FrameStats&) = default;
};

// A sequence of T simple undirected graphs on the shared vertex set [0, n).
// Immutable after construction.
class TemporalGraph {
 public:
  // Validates every edge; edges may be given in either orientation.
  // Throws EdgeOutOfRange, SelfLoop or DuplicateEdge.
  TemporalGraph(std::size_t n, std::vector<std::vector<Edge>> frames);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t frame_count() const noexcept { return frames_.size(); }

  // Sorted edges of frame t.
  std::span<const Edge> frame(std::size_t t) const;
  // Sorted neighbours of v in frame t.
  std::span<const Vertex> neighbors(std::size_t t, Vertex v) const;
  std::uint32_t degree(std::size_t t, Vertex v) const;
  std::uint32_t max_degree(std::size_t t) const;
  bool has_edge(std::size_t t, Vertex a, Vertex b) const;

  // Sorted union edge set E = E_1 ∪ ... ∪ E_T.
  const std::vector<Edge>& union_edges() const noexcept { return union_edges_; }
  // Position of e in union_edges(), or npos.
  std::size_t union_index(const Edge& e) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.n_ == b.n_ && a.frames_ == b.frames_;
  }

 private:
  struct Adjacency {
    std::vector<std::uint32_t> offsets;
    std::vector<Vertex> targets;
  };

  void check_frame(std::size_t t) const;

  std::size_t n_;
  std::vector<std::vector<Edge>> frames_;
  std::vector<Adjacency> adjacency_;
  std::vector<Edge> union_edges_;
};

// .dcs text format: header "<n> <T>", then one "<t> <u> <v>" line per edge.
// Blank lines and lines starting with '#' are ignored.
TemporalGraph parse_dcs(std::string_view text);
std::string serialize_dcs(const TemporalGraph& g);

TemporalGraph read_dcs_file(const std::string& path);
void write_dcs_file(const std::string& path, const TemporalGraph& g);

// |E_t[S]| and min-deg(G_t[S]).
FrameStats induced_stats(const TemporalGraph& g, std::size_t t, const VertexSet& s);

// 64-bit FNV-1a digest of the canonical serialization.
std::uint64_t content_digest(const TemporalGraph& g);

}  // namespace dcs
