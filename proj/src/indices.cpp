#include "zdg/indices.hpp"

#include <cmath>

namespace zdg {

std::int64_t wiener(const DistanceMatrix &d) {
  std::int64_t total = 0;
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = i + 1; j < d.cols(); ++j) {
      if (d(i, j) == kUnreachable)
        throw DisconnectedGraph("Wiener index needs a connected graph");
      total += d(i, j);
    }
  return total;
}

std::int64_t wiener(const Graph &g) { return wiener(all_pairs_distances(g)); }

double randic(const Graph &g) {
  const auto deg = degree_sequence(g);
  for (Vertex d : deg)
    if (d == 0)
      throw std::domain_error("Randic index is undefined with isolated vertices");
  double total = 0.0;
  for (auto [i, j] : g.edges())
    total += 1.0 / std::sqrt(static_cast<double>(deg[i]) * static_cast<double>(deg[j]));
  return total;
}

std::int64_t zagreb_m1(const Graph &g) {
  std::int64_t total = 0;
  for (Vertex d : degree_sequence(g))
    total += std::int64_t{d} * d;
  return total;
}

std::int64_t zagreb_m2(const Graph &g) {
  const auto deg = degree_sequence(g);
  std::int64_t total = 0;
  for (auto [i, j] : g.edges())
    total += std::int64_t{deg[i]} * deg[j];
  return total;
}

TopologicalIndices topological_indices(const Graph &g, const DistanceMatrix &d) {
  return {wiener(d), randic(g), zagreb_m1(g), zagreb_m2(g)};
}

} // namespace zdg
