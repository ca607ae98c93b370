#include "dcs/objectives.hpp"

#include "dcs/error.hpp"

#include <algorithm>
#include <functional>

namespace dcs {

std::string to_string(const ObjectiveKind& kind) {
  switch (kind.type) {
    case Objective::MM: return "mm";
    case Objective::MA: return "ma";
    case Objective::AM: return "am";
    case Objective::AA: return "aa";
    case Objective::KMA: return "kma(" + std::to_string(kind.k) + ")";
  }
  return "?";
}

namespace {

void require_nonempty(const VertexSet& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySolution, "objective evaluated on an empty set");
}

}  // namespace

std::vector<Rational> frame_densities(const TemporalGraph& g, const VertexSet& s) {
  require_nonempty(s);
  std::vector<Rational> out;
  out.reserve(g.frame_count());
  const mpz_class size(static_cast<unsigned long>(s.size()));
  for (std::size_t t = 0; t < g.frame_count(); ++t) {
    Rational d(mpz_class(static_cast<unsigned long>(induced_stats(g, t, s).edge_count)), size);
    d.canonicalize();
    out.push_back(std::move(d));
  }
  return out;
}

Score score(const TemporalGraph& g, const VertexSet& s, const ObjectiveKind& kind) {
  require_nonempty(s);
  const std::size_t frames = g.frame_count();
  if (kind.type == Objective::KMA && (kind.k == 0 || kind.k > frames)) {
    throw Error(ErrorCode::KOrderOutOfRange,
                "k=" + std::to_string(kind.k) + " outside [1, " + std::to_string(frames) + "]");
  }

  Score out;
  switch (kind.type) {
    case Objective::MM:
    case Objective::AM: {
      for (std::size_t t = 0; t < frames; ++t) {
        out.per_frame.emplace_back(mpz_class(static_cast<unsigned long>(induced_stats(g, t, s).min_degree)));
      }
      if (kind.type == Objective::MM) {
        out.value = *std::min_element(out.per_frame.begin(), out.per_frame.end());
      } else {
        out.value = 0;
        for (const auto& r : out.per_frame) out.value += r;
      }
      break;
    }
    case Objective::MA:
      out.per_frame = frame_densities(g, s);
      out.value = *std::min_element(out.per_frame.begin(), out.per_frame.end());
      break;
    case Objective::AA:
      out.per_frame = frame_densities(g, s);
      out.value = 0;
      for (auto& r : out.per_frame) {
        r *= 2;
        out.value += r;
      }
      break;
    case Objective::KMA: {
      out.per_frame = frame_densities(g, s);
      std::vector<Rational> sorted = out.per_frame;
      std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(kind.k - 1), sorted.end(),
                       std::greater<>());
      out.value = sorted[kind.k - 1];
      break;
    }
  }
  out.value.canonicalize();
  return out;
}

}  // namespace dcs
