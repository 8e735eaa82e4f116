#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "zdg/graph.hpp"

using namespace zdg;

namespace {

// Edge count straight from the ring product, no shortcut criterion.
std::int64_t brute_edge_count(std::int64_t p) {
  const OddPrime q(p);
  const auto z = enumerate_zero_divisors(q);
  std::int64_t m = 0;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      m += mul(z[i], z[j], q).is_zero();
  return m;
}

// Single-source BFS over an adjacency-list view.
std::vector<std::int32_t> bfs(const Graph &g, Vertex s) {
  std::vector<std::int32_t> d(g.order(), -1);
  std::queue<Vertex> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : g.neighbors(x))
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push(y);
      }
  }
  return d;
}

Graph random_graph(Vertex n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  return Graph::from_relation(n, [&](Vertex, Vertex) { return coin(rng); });
}

Vertex index_of(const ZeroDivisorGraph &z, std::int64_t b, std::int64_t c, std::int64_t d) {
  return z.labeling.index(RingElement::make(0, b, c, d, z.p));
}

} // namespace

TEST(Graph, FromEdgesBasics) {
  const std::vector<Edge> e = {{0, 1}, {1, 2}};
  const Graph g = Graph::from_edges(3, e);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edges(), e);
}

TEST(Graph, RejectsLoopsAndDuplicates) {
  const std::vector<Edge> loop = {{1, 1}};
  const std::vector<Edge> dup = {{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(2, loop), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(2, dup), std::invalid_argument);
}

TEST(Graph, BitRowsSymmetricWithClearDiagonal) {
  const Graph g = random_graph(130, 0.3, 5);
  std::int64_t bits = 0;
  for (Vertex i = 0; i < g.order(); ++i) {
    EXPECT_FALSE(g.adjacent(i, i));
    for (Vertex j = 0; j < g.order(); ++j) {
      EXPECT_EQ(g.adjacent(i, j), g.adjacent(j, i));
      bits += g.adjacent(i, j);
    }
  }
  EXPECT_EQ(bits, 2 * g.size());
}

TEST(Graph, Factories) {
  EXPECT_EQ(complete_graph(6).size(), 15);
  EXPECT_EQ(cycle_graph(7).size(), 7);
  EXPECT_EQ(path_graph(5).size(), 4);
  EXPECT_EQ(star_graph(4).order(), 5);
  EXPECT_EQ(star_graph(4).degree(0), 4);
  EXPECT_EQ(empty_graph(4).size(), 0);
}

TEST(ZeroDivisorGraph, OrderAndSizeAtThree) {
  const auto z = build_zero_divisor_graph(OddPrime(3));
  EXPECT_EQ(z.graph.order(), 26);
  EXPECT_EQ(z.graph.size(), brute_edge_count(3));
  EXPECT_EQ(z.graph.size(), 115);
}

TEST(ZeroDivisorGraph, SizeAtFive) {
  const auto z = build_zero_divisor_graph(OddPrime(5));
  EXPECT_EQ(z.graph.order(), 124);
  EXPECT_EQ(z.graph.size(), brute_edge_count(5));
  EXPECT_EQ(z.graph.size(), 1666);
}

TEST(ZeroDivisorGraph, GuardRaisesResourceError) {
  EXPECT_THROW(build_zero_divisor_graph(OddPrime(7), 5), ResourceError);
  EXPECT_NO_THROW(build_zero_divisor_graph(OddPrime(5), 5));
}

TEST(ZeroDivisorGraph, LabelingFollowsEnumeration) {
  const auto z = build_zero_divisor_graph(OddPrime(5));
  const auto elems = enumerate_zero_divisors(OddPrime(5));
  ASSERT_EQ(z.labeling.size(), static_cast<Vertex>(elems.size()));
  for (Vertex v = 0; v < z.labeling.size(); ++v) {
    EXPECT_EQ(z.labeling.element(v), elems[v]);
    EXPECT_EQ(z.labeling.index(elems[v]), v);
  }
}

TEST(ZeroDivisorGraph, RandomPairsAgreeWithRingProduct) {
  const auto z = build_zero_divisor_graph(OddPrime(7));
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Vertex> pick(0, z.graph.order() - 1);
  for (int k = 0; k < 1000; ++k) {
    const Vertex i = pick(rng), j = pick(rng);
    if (i == j)
      continue;
    const bool zero = mul(z.labeling.element(i), z.labeling.element(j), z.p).is_zero();
    EXPECT_EQ(z.graph.adjacent(i, j), zero);
  }
}

TEST(ZeroDivisorGraph, DegreesOfNamedVertices) {
  const auto z = build_zero_divisor_graph(OddPrime(3));
  EXPECT_EQ(z.graph.degree(index_of(z, 0, 0, 1)), 25); // uv is universal
  EXPECT_EQ(z.graph.degree(index_of(z, 1, 0, 0)), 7);  // u
  EXPECT_EQ(z.graph.degree(index_of(z, 1, 0, 1)), 7);  // u + uv
  EXPECT_EQ(z.graph.degree(index_of(z, 1, 1, 0)), 8);  // u + v
}

TEST(ZeroDivisorGraph, PartitionCoversWithClassSizes) {
  for (std::int64_t p : {3, 5}) {
    const auto z = build_zero_divisor_graph(OddPrime(p));
    ASSERT_EQ(z.partition.block_count(), kClassCount);
    std::vector<int> seen(z.graph.order(), 0);
    for (std::size_t b = 0; b < kClassCount; ++b) {
      EXPECT_EQ(static_cast<std::int64_t>(z.partition.blocks[b].size()),
                class_size(kAllClasses[b], z.p));
      for (Vertex v : z.partition.blocks[b]) {
        ++seen[v];
        EXPECT_EQ(classify(z.labeling.element(v)), kAllClasses[b]);
      }
    }
    EXPECT_TRUE(std::ranges::all_of(seen, [](int s) { return s == 1; }));
  }
}

TEST(ZeroDivisorGraph, DegreeUniformWithinBlocks) {
  const auto z = build_zero_divisor_graph(OddPrime(5));
  const auto deg = degree_sequence(z.graph);
  for (const auto &block : z.partition.blocks)
    for (Vertex v : block)
      EXPECT_EQ(deg[v], deg[block.front()]);
}

TEST(ZeroDivisorGraph, Handshake) {
  for (std::int64_t p : {3, 5, 7}) {
    const auto z = build_zero_divisor_graph(OddPrime(p));
    const auto deg = degree_sequence(z.graph);
    EXPECT_EQ(std::accumulate(deg.begin(), deg.end(), std::int64_t{0}), 2 * z.graph.size());
  }
}

TEST(Distances, MatchAdjacencyListBfs) {
  const Graph g = random_graph(90, 0.05, 9);
  const auto d = all_pairs_distances(g);
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto ref = bfs(g, s);
    for (Vertex t = 0; t < g.order(); ++t)
      EXPECT_EQ(d(s, t), ref[t] < 0 ? kUnreachable : ref[t]);
  }
}

TEST(Distances, SmallGraphs) {
  EXPECT_EQ(diameter(complete_graph(4)), 1);
  EXPECT_EQ(diameter(path_graph(3)), 2);
  EXPECT_EQ(diameter(cycle_graph(5)), 2);
  EXPECT_EQ(diameter(empty_graph(3)), std::nullopt);
  EXPECT_EQ(girth(complete_graph(4)), 3);
  EXPECT_EQ(girth(path_graph(3)), std::nullopt);
  EXPECT_EQ(girth(cycle_graph(5)), 5);
  EXPECT_EQ(girth(cycle_graph(8)), 8);
}

TEST(Distances, GirthAgainstEdgeRemovalOracle) {
  // Shortest cycle through edge (a, b) is 1 + dist(a, b) in g minus that edge.
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = random_graph(14, 0.18, seed);
    std::optional<std::int32_t> best;
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      std::vector<Edge> rest = edges;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      const auto d = bfs(Graph::from_edges(g.order(), rest), edges[k].first);
      const auto len = d[edges[k].second];
      if (len > 0 && (!best || len + 1 < *best))
        best = len + 1;
    }
    EXPECT_EQ(girth(g), best) << "seed " << seed;
  }
}

TEST(Distances, ZeroDivisorGraphDiameterGirthEccentricity) {
  for (std::int64_t p : {3, 5}) {
    const auto z = build_zero_divisor_graph(OddPrime(p));
    EXPECT_EQ(diameter(z.graph), 2);
    EXPECT_EQ(girth(z.graph), 3);
    const auto ecc = eccentricities(z.graph);
    for (Vertex v = 0; v < z.graph.order(); ++v) {
      const bool universal = z.graph.degree(v) == z.graph.order() - 1;
      EXPECT_EQ(ecc[v], universal ? 1 : 2);
      EXPECT_EQ(universal, classify(z.labeling.element(v)) == ZdClass::UV);
    }
  }
}

TEST(Distances, DiameterTwoSumIdentity) {
  const auto z = build_zero_divisor_graph(OddPrime(5));
  const auto d = all_pairs_distances(z.graph);
  std::int64_t sum = 0;
  for (Vertex i = 0; i < z.graph.order(); ++i)
    for (Vertex j = i + 1; j < z.graph.order(); ++j)
      sum += d(i, j);
  const std::int64_t n = z.graph.order();
  EXPECT_EQ(sum, n * (n - 1) - z.graph.size());
}

TEST(Distances, EccentricitiesThrowWhenDisconnected) {
  EXPECT_THROW(eccentricities(empty_graph(2)), DisconnectedGraph);
  EXPECT_FALSE(is_connected(empty_graph(2)));
  EXPECT_EQ(component_count(empty_graph(3)), 3);
  EXPECT_TRUE(is_connected(path_graph(6)));
}

TEST(Graph, PermutedPreservesStructure) {
  const Graph g = random_graph(40, 0.2, 1);
  std::vector<Vertex> perm(40);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(2));
  const Graph h = g.permuted(perm);
  EXPECT_EQ(h.size(), g.size());
  for (auto [i, j] : g.edges())
    EXPECT_TRUE(h.adjacent(perm[i], perm[j]));
}
