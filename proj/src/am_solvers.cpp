#include "dcs/am_solvers.hpp"

#include "dcs/error.hpp"
#include "dcs/random.hpp"

#include <algorithm>
#include <numeric>

namespace dcs {

std::uint64_t CoreVector::sum() const { return std::accumulate(k.begin(), k.end(), std::uint64_t{0}); }

namespace {

void validate_vector(const TemporalGraph& g, const CoreVector& kv) {
  if (kv.k.size() != g.frame_count()) {
    throw Error(ErrorCode::InvalidArgument, "core vector has " + std::to_string(kv.k.size()) + " entries, expected " +
                                                std::to_string(g.frame_count()));
  }
  for (auto k : kv.k) {
    if (k >= g.vertex_count() && k != 0) {
      throw Error(ErrorCode::InvalidArgument, "threshold " + std::to_string(k) + " exceeds n-1");
    }
  }
}

VertexSet peel(const TemporalGraph& g, const CoreVector& kv, const VertexSet& within,
               std::optional<std::uint64_t> removal_seed) {
  const std::size_t n = g.vertex_count();
  const std::size_t frames = g.frame_count();
  std::vector<char> alive(n, 0);
  for (Vertex v : within) alive[v] = 1;

  std::vector<std::vector<std::uint32_t>> deg(frames, std::vector<std::uint32_t>(n, 0));
  std::vector<char> queued(n, 0);
  std::vector<Vertex> pending;
  for (Vertex v : within) {
    bool violates = false;
    for (std::size_t t = 0; t < frames; ++t) {
      std::uint32_t d = 0;
      for (Vertex w : g.neighbors(t, v)) d += alive[w];
      deg[t][v] = d;
      violates = violates || d < kv.k[t];
    }
    if (violates) {
      queued[v] = 1;
      pending.push_back(v);
    }
  }

  std::optional<SplitMix64> rng;
  if (removal_seed) rng.emplace(SplitMix64::stream(*removal_seed, 0));

  std::size_t head = 0;
  while (head < pending.size()) {
    if (rng) {
      // Swap a random pending vertex into the head slot.
      const auto pick = head + static_cast<std::size_t>(rng->below(pending.size() - head));
      std::swap(pending[head], pending[pick]);
    }
    const Vertex v = pending[head++];
    alive[v] = 0;
    for (std::size_t t = 0; t < frames; ++t) {
      for (Vertex w : g.neighbors(t, v)) {
        if (!alive[w]) continue;
        if (--deg[t][w] < kv.k[t] && !queued[w]) {
          queued[w] = 1;
          pending.push_back(w);
        }
      }
    }
  }

  std::vector<Vertex> out;
  for (Vertex v : within)
    if (alive[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

std::uint64_t am_value(const TemporalGraph& g, const VertexSet& s) {
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < g.frame_count(); ++t) total += induced_stats(g, t, s).min_degree;
  return total;
}

// Branch-and-bound over threshold vectors drawn from per-frame candidate
// lists (ascending, starting at 0). Vectors are visited in lexicographic
// order and only strict improvements are kept.
class VectorSearch {
 public:
  VectorSearch(const TemporalGraph& g, std::vector<std::vector<std::uint32_t>> candidates, std::uint64_t cap)
      : g_(g), candidates_(std::move(candidates)), cap_(cap), current_(g.frame_count(), 0) {
    tail_max_.assign(candidates_.size() + 1, 0);
    for (std::size_t i = candidates_.size(); i-- > 0;) tail_max_[i] = tail_max_[i + 1] + candidates_[i].back();
  }

  AmResult run() {
    descend(0, 0, VertexSet::all(g_.vertex_count()));
    AmResult r;
    r.solution = best_set_;
    r.vector = CoreVector{best_vector_};
    r.value = am_value(g_, best_set_);
    r.vectors_visited = visited_;
    return r;
  }

 private:
  bool dominated() const {
    return std::any_of(frontier_.begin(), frontier_.end(), [&](const std::vector<std::uint32_t>& f) {
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] > current_[i]) return false;
      return true;
    });
  }

  void record_empty() {
    frontier_.erase(std::remove_if(frontier_.begin(), frontier_.end(),
                                   [&](const std::vector<std::uint32_t>& f) {
                                     for (std::size_t i = 0; i < f.size(); ++i)
                                       if (current_[i] > f[i]) return false;
                                     return true;
                                   }),
                    frontier_.end());
    frontier_.push_back(current_);
  }

  void descend(std::size_t frame, std::uint64_t prefix_sum, const VertexSet& start) {
    const bool last = frame + 1 == candidates_.size();
    VertexSet within = start;
    for (std::uint32_t c : candidates_[frame]) {
      if (have_best_ && prefix_sum + c + tail_max_[frame + 1] <= best_sum_) continue;
      current_[frame] = c;
      if (dominated()) break;
      if (++visited_ > cap_) {
        throw Error(ErrorCode::BudgetExceeded, "threshold search exceeded " + std::to_string(cap_) + " vectors");
      }
      // Raising one threshold only shrinks the core, so peel from the last one.
      VertexSet core_set = peel(g_, CoreVector{current_}, within, std::nullopt);
      if (core_set.empty()) {
        record_empty();
        break;
      }
      if (last) {
        if (!have_best_ || prefix_sum + c > best_sum_) {
          have_best_ = true;
          best_sum_ = prefix_sum + c;
          best_vector_ = current_;
          best_set_ = core_set;
        }
      } else {
        descend(frame + 1, prefix_sum + c, core_set);
      }
      within = std::move(core_set);
    }
    current_[frame] = 0;
  }

  const TemporalGraph& g_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::uint64_t cap_;
  std::vector<std::uint64_t> tail_max_;
  std::vector<std::uint32_t> current_;
  std::vector<std::vector<std::uint32_t>> frontier_;
  std::uint64_t visited_ = 0;
  bool have_best_ = false;
  std::uint64_t best_sum_ = 0;
  std::vector<std::uint32_t> best_vector_;
  VertexSet best_set_;
};

}  // namespace

VertexSet core(const TemporalGraph& g, const CoreVector& kv, std::optional<std::uint64_t> removal_seed) {
  validate_vector(g, kv);
  return peel(g, kv, VertexSet::all(g.vertex_count()), removal_seed);
}

VertexSet core_within(const TemporalGraph& g, const CoreVector& kv, const VertexSet& within) {
  validate_vector(g, kv);
  return peel(g, kv, within, std::nullopt);
}

AmResult exact_am(const TemporalGraph& g, std::uint64_t vector_cap) {
  std::vector<std::vector<std::uint32_t>> candidates(g.frame_count());
  for (std::size_t t = 0; t < g.frame_count(); ++t) {
    candidates[t].resize(g.max_degree(t) + 1);
    std::iota(candidates[t].begin(), candidates[t].end(), 0U);
  }
  return VectorSearch(g, std::move(candidates), vector_cap).run();
}

std::vector<std::uint32_t> fpt_grid(const Rational& eps, std::uint32_t max_value) {
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  std::vector<std::uint32_t> grid{0};
  const Rational ratio = 1 + eps;
  Rational power = 1;
  while (true) {
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), power.get_num_mpz_t(), power.get_den_mpz_t());
    if (whole > max_value) break;
    const auto value = static_cast<std::uint32_t>(whole.get_ui());
    if (value != grid.back()) grid.push_back(value);
    power *= ratio;
  }
  return grid;
}

AmResult fpt_approx_am(const TemporalGraph& g, const Rational& eps, std::uint64_t vector_cap) {
  const auto grid = fpt_grid(eps, static_cast<std::uint32_t>(g.vertex_count() - 1));
  std::vector<std::vector<std::uint32_t>> candidates(g.frame_count());
  for (std::size_t t = 0; t < g.frame_count(); ++t) {
    const auto cap = g.max_degree(t);
    for (auto value : grid)
      if (value <= cap) candidates[t].push_back(value);
  }
  return VectorSearch(g, std::move(candidates), vector_cap).run();
}

}  // namespace dcs
