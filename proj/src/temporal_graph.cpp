#include "dcs/temporal_graph.hpp"

#include "dcs/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace dcs {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::all(std::size_t n) {
  std::vector<Vertex> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Vertex>(i);
  return VertexSet(std::move(m));
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

TemporalGraph::TemporalGraph(std::size_t n, std::vector<std::vector<Edge>> frames) : n_(n), frames_(std::move(frames)) {
  if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "a temporal graph needs at least one vertex");
  if (frames_.empty()) throw Error(ErrorCode::InvalidArgument, "a temporal graph needs at least one frame");
  if (n_ > std::numeric_limits<Vertex>::max()) throw Error(ErrorCode::InvalidArgument, "too many vertices");

  adjacency_.resize(frames_.size());
  for (std::size_t t = 0; t < frames_.size(); ++t) {
    auto& edges = frames_[t];
    for (auto& e : edges) {
      if (e.u >= n_ || e.v >= n_) {
        throw Error(ErrorCode::EdgeOutOfRange, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                                   ") in frame " + std::to_string(t) + " exceeds n=" + std::to_string(n_));
      }
      e = make_edge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
      throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                                                ") repeated in frame " + std::to_string(t));
    }

    auto& adj = adjacency_[t];
    adj.offsets.assign(n_ + 1, 0);
    for (const auto& e : edges) {
      ++adj.offsets[e.u + 1];
      ++adj.offsets[e.v + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) adj.offsets[v + 1] += adj.offsets[v];
    adj.targets.resize(edges.size() * 2);
    std::vector<std::uint32_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (const auto& e : edges) {
      adj.targets[cursor[e.u]++] = e.v;
      adj.targets[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      std::sort(adj.targets.begin() + adj.offsets[v], adj.targets.begin() + adj.offsets[v + 1]);
    }
  }

  for (const auto& edges : frames_) union_edges_.insert(union_edges_.end(), edges.begin(), edges.end());
  std::sort(union_edges_.begin(), union_edges_.end());
  union_edges_.erase(std::unique(union_edges_.begin(), union_edges_.end()), union_edges_.end());
}

void TemporalGraph::check_frame(std::size_t t) const {
  if (t >= frames_.size()) {
    throw Error(ErrorCode::FrameIndexOutOfRange,
                "frame " + std::to_string(t) + " (T=" + std::to_string(frames_.size()) + ")");
  }
}

std::span<const Edge> TemporalGraph::frame(std::size_t t) const {
  check_frame(t);
  return frames_[t];
}

std::span<const Vertex> TemporalGraph::neighbors(std::size_t t, Vertex v) const {
  check_frame(t);
  const auto& adj = adjacency_[t];
  return std::span<const Vertex>(adj.targets).subspan(adj.offsets[v], adj.offsets[v + 1] - adj.offsets[v]);
}

std::uint32_t TemporalGraph::degree(std::size_t t, Vertex v) const {
  check_frame(t);
  return adjacency_[t].offsets[v + 1] - adjacency_[t].offsets[v];
}

std::uint32_t TemporalGraph::max_degree(std::size_t t) const {
  std::uint32_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(t, v));
  return best;
}

bool TemporalGraph::has_edge(std::size_t t, Vertex a, Vertex b) const {
  if (a == b || a >= n_ || b >= n_) return false;
  auto nb = neighbors(t, a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t TemporalGraph::union_index(const Edge& e) const {
  auto it = std::lower_bound(union_edges_.begin(), union_edges_.end(), e);
  if (it == union_edges_.end() || *it != e) return npos;
  return static_cast<std::size_t>(it - union_edges_.begin());
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

TemporalGraph parse_dcs(std::string_view text) {
  std::uint64_t n = 0;
  std::uint64_t frame_count = 0;
  bool have_header = false;
  std::vector<std::vector<Edge>> frames;
  // (frame, edge) -> first line that mentioned it, for duplicate diagnostics.
  std::vector<std::vector<std::pair<Edge, std::size_t>>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!have_header) {
      if (fields.size() != 2 || !parse_u64(fields[0], n) || !parse_u64(fields[1], frame_count) || n == 0 ||
          frame_count == 0 || n > std::numeric_limits<Vertex>::max()) {
        throw ParseError(ErrorCode::MalformedHeader, line_no, "expected '<n> <T>' with n, T >= 1");
      }
      have_header = true;
      frames.resize(frame_count);
      seen.resize(frame_count);
      continue;
    }

    std::uint64_t t = 0, u = 0, v = 0;
    if (fields.size() != 3 || !parse_u64(fields[0], t) || !parse_u64(fields[1], u) || !parse_u64(fields[2], v)) {
      throw ParseError(ErrorCode::MalformedLine, line_no, "expected '<t> <u> <v>'");
    }
    if (t >= frame_count) {
      throw ParseError(ErrorCode::EdgeOutOfRange, line_no, "frame index " + std::to_string(t) + " >= T");
    }
    if (u >= n || v >= n) {
      throw ParseError(ErrorCode::EdgeOutOfRange, line_no, "endpoint >= n=" + std::to_string(n));
    }
    if (u == v) throw ParseError(ErrorCode::SelfLoop, line_no, "self-loop at vertex " + std::to_string(u));
    Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    frames[t].push_back(e);
    seen[t].emplace_back(e, line_no);
  }
  if (!have_header) throw ParseError(ErrorCode::MalformedHeader, line_no == 0 ? 1 : line_no, "missing header");

  for (auto& entries : seen) {
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (entries[i].first == entries[i - 1].first) {
        throw ParseError(ErrorCode::DuplicateEdge, entries[i].second,
                         "edge (" + std::to_string(entries[i].first.u) + "," + std::to_string(entries[i].first.v) +
                             ") already listed on line " + std::to_string(entries[i - 1].second));
      }
    }
  }
  return TemporalGraph(n, std::move(frames));
}

std::string serialize_dcs(const TemporalGraph& g) {
  std::string out;
  out += std::to_string(g.vertex_count()) + " " + std::to_string(g.frame_count()) + "\n";
  for (std::size_t t = 0; t < g.frame_count(); ++t) {
    for (const auto& e : g.frame(t)) {
      out += std::to_string(t);
      out += ' ';
      out += std::to_string(e.u);
      out += ' ';
      out += std::to_string(e.v);
      out += '\n';
    }
  }
  return out;
}

TemporalGraph read_dcs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dcs(buf.str());
}

void write_dcs_file(const std::string& path, const TemporalGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << serialize_dcs(g);
}

FrameStats induced_stats(const TemporalGraph& g, std::size_t t, const VertexSet& s) {
  if (t >= g.frame_count()) {
    throw Error(ErrorCode::FrameIndexOutOfRange,
                "frame " + std::to_string(t) + " (T=" + std::to_string(g.frame_count()) + ")");
  }
  if (s.empty()) throw Error(ErrorCode::EmptySolution, "induced statistics need a nonempty set");
  if (s.members().back() >= g.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(s.members().back()) + " outside graph");
  }

  std::vector<char> inside(g.vertex_count(), 0);
  for (Vertex v : s) inside[v] = 1;

  std::uint64_t degree_sum = 0;
  std::uint32_t min_degree = std::numeric_limits<std::uint32_t>::max();
  for (Vertex v : s) {
    std::uint32_t d = 0;
    for (Vertex w : g.neighbors(t, v)) d += inside[w];
    degree_sum += d;
    min_degree = std::min(min_degree, d);
  }
  return FrameStats{degree_sum / 2, min_degree};
}

std::uint64_t content_digest(const TemporalGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_dcs(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace dcs
