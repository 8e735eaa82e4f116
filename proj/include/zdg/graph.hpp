#pragma once

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

/// Thrown when a requested construction exceeds the configured size guard.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown by invariants that need a connected graph.
class DisconnectedGraph : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph stored as dense bit rows.
class Graph {
public:
  using Word = std::uint64_t;

  Graph() = default;

  /// Loops and duplicate edges are rejected.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  template <class Pred> static Graph from_relation(Vertex n, Pred &&adjacent) {
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (adjacent(i, j))
          g.set_edge(i, j);
    return g;
  }

  Vertex order() const noexcept { return n_; }
  std::int64_t size() const noexcept { return m_; }

  bool adjacent(Vertex i, Vertex j) const noexcept {
    return (row(i)[j / 64] >> (j % 64)) & 1u;
  }

  std::span<const Word> row(Vertex i) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(i) * stride_, stride_};
  }
  std::size_t words_per_row() const noexcept { return stride_; }

  Vertex degree(Vertex i) const noexcept;

  std::vector<Vertex> neighbors(Vertex i) const;

  /// Edges (i, j) with i < j in ascending order.
  std::vector<Edge> edges() const;

  /// Relabels vertex v as perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

private:
  explicit Graph(Vertex n);
  void set_edge(Vertex i, Vertex j);

  Vertex n_ = 0;
  std::int64_t m_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

Graph complete_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph path_graph(Vertex n);
Graph star_graph(Vertex leaves);
Graph empty_graph(Vertex n);

/// Bijection vertex index <-> ring element, in enumeration order.
class VertexLabeling {
public:
  VertexLabeling() = default;
  explicit VertexLabeling(std::vector<RingElement> elements);

  const RingElement &element(Vertex v) const { return elements_.at(v); }
  Vertex index(const RingElement &x) const;
  std::span<const RingElement> elements() const noexcept { return elements_; }
  Vertex size() const noexcept { return static_cast<Vertex>(elements_.size()); }

private:
  std::vector<RingElement> elements_;
  std::map<RingElement, Vertex> index_;
};

/// Ordered vertex blocks; for the zero-divisor graph these follow kAllClasses.
struct VertexPartition {
  std::vector<std::vector<Vertex>> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
  /// Block index of every vertex; throws if the blocks do not partition [0, n).
  std::vector<std::size_t> block_of(Vertex n) const;
};

struct ZeroDivisorGraph {
  OddPrime p;
  Graph graph;
  VertexLabeling labeling;
  VertexPartition partition;
};

/// Builds the annihilation graph on Z*(R). Throws ResourceError when
/// `max_p` is given and p exceeds it.
ZeroDivisorGraph build_zero_divisor_graph(OddPrime p,
                                          std::optional<std::int64_t> max_p = {});

std::vector<Vertex> degree_sequence(const Graph &g);

using DistanceMatrix = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic>;
inline constexpr std::int32_t kUnreachable = std::numeric_limits<std::int32_t>::max();

DistanceMatrix all_pairs_distances(const Graph &g);

/// Largest finite distance, or nullopt when g is disconnected.
std::optional<std::int32_t> diameter(const Graph &g);
std::optional<std::int32_t> diameter(const DistanceMatrix &d);

/// Shortest cycle length, or nullopt for forests.
std::optional<std::int32_t> girth(const Graph &g);

/// Throws DisconnectedGraph.
std::vector<std::int32_t> eccentricities(const DistanceMatrix &d);
std::vector<std::int32_t> eccentricities(const Graph &g);

bool is_connected(const Graph &g);
std::int32_t component_count(const Graph &g);

} // namespace zdg
