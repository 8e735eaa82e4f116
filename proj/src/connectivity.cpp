#include "zdg/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace zdg {

void UnitFlowNetwork::add_arc(std::int32_t from, std::int32_t to, std::int32_t capacity,
                              std::int32_t reverse_capacity) {
  const auto fwd = static_cast<std::int32_t>(adj_[from].size());
  const auto bwd = static_cast<std::int32_t>(adj_[to].size()) + (from == to ? 1 : 0);
  adj_[from].push_back({to, capacity, capacity, bwd});
  adj_[to].push_back({from, reverse_capacity, reverse_capacity, fwd});
}

std::int32_t UnitFlowNetwork::max_flow(std::int32_t s, std::int32_t t, std::int32_t limit) {
  const auto nodes = static_cast<std::int32_t>(adj_.size());
  std::vector<std::int32_t> via_node(nodes), via_arc(nodes);
  std::int32_t flow = 0;
  while (flow < limit) {
    std::ranges::fill(via_node, -1);
    via_node[s] = s;
    std::queue<std::int32_t> q;
    q.push(s);
    while (!q.empty() && via_node[t] < 0) {
      const std::int32_t x = q.front();
      q.pop();
      for (std::size_t k = 0; k < adj_[x].size(); ++k) {
        const Arc &a = adj_[x][k];
        if (a.cap > 0 && via_node[a.to] < 0) {
          via_node[a.to] = x;
          via_arc[a.to] = static_cast<std::int32_t>(k);
          q.push(a.to);
        }
      }
    }
    if (via_node[t] < 0)
      break;
    for (std::int32_t y = t; y != s; y = via_node[y]) {
      Arc &a = adj_[via_node[y]][via_arc[y]];
      a.cap -= 1;
      adj_[y][a.rev].cap += 1;
      touched_.emplace_back(via_node[y], via_arc[y]);
      touched_.emplace_back(y, a.rev);
    }
    ++flow;
  }
  for (auto [x, k] : touched_)
    adj_[x][k].cap = adj_[x][k].initial;
  touched_.clear();
  return flow;
}

std::int32_t min_degree(const Graph &g) {
  if (g.order() == 0)
    return 0;
  const auto deg = degree_sequence(g);
  return *std::ranges::min_element(deg);
}

std::int32_t vertex_connectivity(const Graph &g) {
  const Vertex n = g.order();
  if (n <= 1)
    return 0;
  if (g.size() == static_cast<std::int64_t>(n) * (n - 1) / 2)
    return n - 1;
  if (!is_connected(g))
    return 0;

  // Split v into in = 2v and out = 2v + 1 joined by a unit arc.
  UnitFlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v)
    net.add_arc(2 * v, 2 * v + 1);
  for (auto [i, j] : g.edges()) {
    net.add_arc(2 * i + 1, 2 * j);
    net.add_arc(2 * j + 1, 2 * i);
  }

  // Some vertex of N[v] survives any cut smaller than deg(v) + 1.
  const auto deg = degree_sequence(g);
  const auto v0 = static_cast<Vertex>(std::ranges::min_element(deg) - deg.begin());
  std::vector<Vertex> sources = g.neighbors(v0);
  sources.insert(sources.begin(), v0);

  // After best + 1 sources, a cut smaller than best would have missed one
  // of them and been found from it.
  std::int32_t best = deg[v0];
  for (std::size_t k = 0; k < sources.size() && k <= static_cast<std::size_t>(best); ++k) {
    const Vertex s = sources[k];
    for (Vertex t = 0; t < n; ++t) {
      if (t == s || g.adjacent(s, t))
        continue;
      best = std::min(best, net.max_flow(2 * s + 1, 2 * t, best));
      if (best == 0)
        return 0;
    }
  }
  return best;
}

std::int32_t edge_connectivity(const Graph &g) {
  const Vertex n = g.order();
  if (n <= 1)
    return 0;
  if (!is_connected(g))
    return 0;
  UnitFlowNetwork net(n);
  for (auto [i, j] : g.edges())
    net.add_arc(i, j, 1, 1);
  std::int32_t best = min_degree(g);
  for (Vertex t = 1; t < n; ++t)
    best = std::min(best, net.max_flow(0, t, best));
  return best;
}

} // namespace zdg
