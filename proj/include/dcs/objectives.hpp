#pragma once

#include "dcs/rational.hpp"
#include "dcs/temporal_graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dcs {

// Aggregate-density objectives. The first letter is the aggregation over
// frames (Min or Average/sum), the second the per-frame statistic (Min degree
// or Average density).
enum class Objective { MM, MA, AM, AA, KMA };

struct ObjectiveKind {
  Objective type = Objective::MA;
  // Order for KMA (1 = densest frame); ignored otherwise.
  std::size_t k = 0;

  static ObjectiveKind mm() { return {Objective::MM, 0}; }
  static ObjectiveKind ma() { return {Objective::MA, 0}; }
  static ObjectiveKind am() { return {Objective::AM, 0}; }
  static ObjectiveKind aa() { return {Objective::AA, 0}; }
  static ObjectiveKind kma(std::size_t k) { return {Objective::KMA, k}; }

  friend bool operator==(const ObjectiveKind&, const ObjectiveKind&) = default;
};

std::string to_string(const ObjectiveKind& kind);

struct Score {
  Rational value;
  // Per-frame statistic: |E_t[S]|/|S| (MA, KMA), 2|E_t[S]|/|S| (AA) or
  // min-deg(G_t[S]) (MM, AM).
  std::vector<Rational> per_frame;
};

// Throws EmptySolution for an empty set and KOrderOutOfRange when a KMA
// order is outside [1, T].
Score score(const TemporalGraph& g, const VertexSet& s, const ObjectiveKind& kind);

// |E_t[S]|/|S| for every frame.
std::vector<Rational> frame_densities(const TemporalGraph& g, const VertexSet& s);

}  // namespace dcs
