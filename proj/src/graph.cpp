#include "zdg/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace zdg {

Graph::Graph(Vertex n)
    : n_(n), stride_((static_cast<std::size_t>(n) + 63) / 64),
      bits_(static_cast<std::size_t>(n) * stride_, 0) {
  if (n < 0)
    throw std::invalid_argument("negative vertex count");
}

void Graph::set_edge(Vertex i, Vertex j) {
  bits_[static_cast<std::size_t>(i) * stride_ + j / 64] |= Word{1} << (j % 64);
  bits_[static_cast<std::size_t>(j) * stride_ + i / 64] |= Word{1} << (i % 64);
  ++m_;
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (i == j)
      throw std::invalid_argument("self-loop");
    if (g.adjacent(i, j))
      throw std::invalid_argument("duplicate edge");
    g.set_edge(i, j);
  }
  return g;
}

Vertex Graph::degree(Vertex i) const noexcept {
  Vertex k = 0;
  for (Word w : row(i))
    k += std::popcount(w);
  return k;
}

std::vector<Vertex> Graph::neighbors(Vertex i) const {
  std::vector<Vertex> out;
  auto r = row(i);
  for (std::size_t w = 0; w < r.size(); ++w)
    for (Word x = r[w]; x != 0; x &= x - 1)
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(x)));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j : neighbors(i))
      if (j > i)
        out.emplace_back(i, j);
  return out;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("permutation size mismatch");
  Graph g(n_);
  for (auto [i, j] : edges())
    g.set_edge(perm[i], perm[j]);
  return g;
}

Graph complete_graph(Vertex n) {
  return Graph::from_relation(n, [](Vertex, Vertex) { return true; });
}

Graph cycle_graph(Vertex n) {
  return Graph::from_relation(
      n, [n](Vertex i, Vertex j) { return j == i + 1 || (i == 0 && j == n - 1); });
}

Graph path_graph(Vertex n) {
  return Graph::from_relation(n, [](Vertex i, Vertex j) { return j == i + 1; });
}

Graph star_graph(Vertex leaves) {
  return Graph::from_relation(leaves + 1, [](Vertex i, Vertex) { return i == 0; });
}

Graph empty_graph(Vertex n) {
  return Graph::from_relation(n, [](Vertex, Vertex) { return false; });
}

VertexLabeling::VertexLabeling(std::vector<RingElement> elements)
    : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!index_.emplace(elements_[i], static_cast<Vertex>(i)).second)
      throw std::invalid_argument("duplicate element in labeling");
}

Vertex VertexLabeling::index(const RingElement &x) const {
  auto it = index_.find(x);
  if (it == index_.end())
    throw std::out_of_range("element " + to_string(x) + " is not a vertex");
  return it->second;
}

std::vector<std::size_t> VertexPartition::block_of(Vertex n) const {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> out(static_cast<std::size_t>(n), unset);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Vertex v : blocks[b]) {
      if (v < 0 || v >= n || out[v] != unset)
        throw std::invalid_argument("blocks are not a partition");
      out[v] = b;
    }
  if (std::ranges::find(out, unset) != out.end())
    throw std::invalid_argument("blocks do not cover every vertex");
  return out;
}

ZeroDivisorGraph build_zero_divisor_graph(OddPrime p, std::optional<std::int64_t> max_p) {
  if (max_p && p.value() > *max_p)
    throw ResourceError("p = " + std::to_string(p.value()) + " exceeds the guard " +
                        std::to_string(*max_p));
  VertexLabeling labels(enumerate_zero_divisors(p));
  const auto elems = labels.elements();
  Graph g = Graph::from_relation(labels.size(), [&](Vertex i, Vertex j) {
    return annihilates(elems[i], elems[j], p);
  });
  VertexPartition part;
  part.blocks.resize(kClassCount);
  for (Vertex v = 0; v < labels.size(); ++v)
    part.blocks[static_cast<std::size_t>(classify(elems[v]))].push_back(v);
  return {p, std::move(g), std::move(labels), std::move(part)};
}

std::vector<Vertex> degree_sequence(const Graph &g) {
  std::vector<Vertex> out(static_cast<std::size_t>(g.order()));
  for (Vertex i = 0; i < g.order(); ++i)
    out[i] = g.degree(i);
  return out;
}

DistanceMatrix all_pairs_distances(const Graph &g) {
  const Vertex n = g.order();
  const std::size_t words = g.words_per_row();
  DistanceMatrix dist = DistanceMatrix::Constant(n, n, kUnreachable);
  std::vector<Graph::Word> visited(words), frontier(words), next(words);
  for (Vertex s = 0; s < n; ++s) {
    std::ranges::fill(visited, 0);
    std::ranges::fill(frontier, 0);
    visited[s / 64] = frontier[s / 64] = Graph::Word{1} << (s % 64);
    dist(s, s) = 0;
    for (std::int32_t level = 1;; ++level) {
      std::ranges::fill(next, 0);
      for (std::size_t w = 0; w < words; ++w)
        for (Graph::Word x = frontier[w]; x != 0; x &= x - 1) {
          auto r = g.row(static_cast<Vertex>(w * 64 + std::countr_zero(x)));
          for (std::size_t k = 0; k < words; ++k)
            next[k] |= r[k];
        }
      bool any = false;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] &= ~visited[w];
        visited[w] |= next[w];
        any |= next[w] != 0;
        for (Graph::Word x = next[w]; x != 0; x &= x - 1)
          dist(s, static_cast<Vertex>(w * 64 + std::countr_zero(x))) = level;
      }
      if (!any)
        break;
      frontier.swap(next);
    }
  }
  return dist;
}

std::optional<std::int32_t> diameter(const DistanceMatrix &d) {
  if (d.size() == 0)
    return 0;
  if ((d.array() == kUnreachable).any())
    return std::nullopt;
  return d.maxCoeff();
}

std::optional<std::int32_t> diameter(const Graph &g) {
  return diameter(all_pairs_distances(g));
}

std::optional<std::int32_t> girth(const Graph &g) {
  const Vertex n = g.order();
  for (auto [i, j] : g.edges()) {
    auto ri = g.row(i), rj = g.row(j);
    for (std::size_t w = 0; w < ri.size(); ++w)
      if (ri[w] & rj[w])
        return 3;
  }
  // Triangle-free: BFS from every root, shortest non-tree edge closes a cycle.
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v)
    adj[v] = g.neighbors(v);
  std::optional<std::int32_t> best;
  std::vector<std::int32_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::ranges::fill(dist, -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      if (best && 2 * dist[x] >= *best)
        break;
      for (Vertex y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          const std::int32_t len = dist[x] + dist[y] + 1;
          if (!best || len < *best)
            best = len;
        }
      }
    }
  }
  return best;
}

std::vector<std::int32_t> eccentricities(const DistanceMatrix &d) {
  if ((d.array() == kUnreachable).any())
    throw DisconnectedGraph("eccentricity is undefined on a disconnected graph");
  std::vector<std::int32_t> out(static_cast<std::size_t>(d.rows()));
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    out[i] = d.row(i).maxCoeff();
  return out;
}

std::vector<std::int32_t> eccentricities(const Graph &g) {
  return eccentricities(all_pairs_distances(g));
}

std::int32_t component_count(const Graph &g) {
  const Vertex n = g.order();
  std::vector<bool> seen(n, false);
  std::int32_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    ++count;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
  }
  return count;
}

bool is_connected(const Graph &g) { return component_count(g) <= 1; }

} // namespace zdg
