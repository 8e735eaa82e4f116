#pragma once

#include <cstdint>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// Directed network with unit arc capacities; augmenting paths by BFS.
class UnitFlowNetwork {
public:
  explicit UnitFlowNetwork(std::int32_t nodes) : adj_(nodes) {}

  /// Adds arc from -> to with `capacity` and a reverse arc with `reverse_capacity`.
  void add_arc(std::int32_t from, std::int32_t to, std::int32_t capacity = 1,
               std::int32_t reverse_capacity = 0);

  /// Max flow from s to t, stopping early once `limit` units are routed.
  /// Residual capacities are restored before returning.
  std::int32_t max_flow(std::int32_t s, std::int32_t t, std::int32_t limit);

private:
  struct Arc {
    std::int32_t to;
    std::int32_t cap;
    std::int32_t initial;
    std::int32_t rev;
  };

  std::vector<std::vector<Arc>> adj_;
  std::vector<std::pair<std::int32_t, std::int32_t>> touched_;
};

/// Minimum number of vertices whose removal disconnects g. Complete graphs
/// return n - 1; disconnected graphs return 0.
std::int32_t vertex_connectivity(const Graph &g);

/// Minimum number of edges whose removal disconnects g; 0 if disconnected.
std::int32_t edge_connectivity(const Graph &g);

/// Minimum degree (0 for the empty graph).
std::int32_t min_degree(const Graph &g);

} // namespace zdg
