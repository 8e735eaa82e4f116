#pragma once

#include <cstdint>

#include "zdg/graph.hpp"

namespace zdg {

// Distance- and degree-based topological indices.

/// Sum of d(i, j) over unordered pairs. Throws DisconnectedGraph.
std::int64_t wiener(const Graph &g);
std::int64_t wiener(const DistanceMatrix &d);

/// Sum over edges of 1 / sqrt(d_a d_b), accumulated in ascending edge order.
/// Throws std::domain_error if g has an isolated vertex.
double randic(const Graph &g);

std::int64_t zagreb_m1(const Graph &g);
std::int64_t zagreb_m2(const Graph &g);

struct TopologicalIndices {
  std::int64_t wiener = 0;
  double randic = 0.0;
  std::int64_t zagreb_m1 = 0;
  std::int64_t zagreb_m2 = 0;
};

TopologicalIndices topological_indices(const Graph &g, const DistanceMatrix &d);

} // namespace zdg
