#include <gtest/gtest.h>

#include <random>

#include "zdg/spectra.hpp"

using namespace zdg;

namespace {

DenseMatrix<double> random_symmetric(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  DenseMatrix<double> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      m(i, j) = m(j, i) = unit(rng);
  return m;
}

Spectrum values(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs)
    v[k++] = x;
  return Spectrum::from_values(v, 1e-9);
}

DenseMatrix<double> p3_quotient() {
  DenseMatrix<double> q(7, 7);
  q << 1, 0, 2, 0, 4, 0, 0,
       0, 1, 2, 0, 0, 4, 0,
       2, 2, 1, 4, 4, 4, 8,
       0, 0, 2, 2, 0, 0, 4,
       2, 0, 2, 0, 3, 0, 0,
       0, 2, 2, 0, 0, 3, 0,
       0, 0, 2, 2, 0, 0, 4;
  return q;
}

} // namespace

TEST(Matrices, SmallGraphs) {
  DenseMatrix<double> k2(2, 2);
  k2 << 0, 1, 1, 0;
  EXPECT_EQ(adjacency_matrix(complete_graph(2)), k2);
  DenseMatrix<int> l3(3, 3);
  l3 << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  EXPECT_EQ(laplacian_matrix<int>(path_graph(3)), l3);
}

TEST(Matrices, ZeroDivisorGraphEntries) {
  const auto z = build_zero_divisor_graph(OddPrime(3));
  const auto a = adjacency_matrix(z.graph);
  auto at = [&](std::int64_t b, std::int64_t c, std::int64_t d) {
    return z.labeling.index(RingElement::make(0, b, c, d, z.p));
  };
  EXPECT_EQ(a(at(0, 0, 1), at(0, 0, 2)), 1.0);
  EXPECT_EQ(a(at(1, 0, 0), at(0, 1, 0)), 0.0);
  EXPECT_EQ(a, a.transpose());
  EXPECT_EQ(a.diagonal().sum(), 0.0);
}

TEST(Matrices, LaplacianRowsSumToZero) {
  const auto z = build_zero_divisor_graph(OddPrime(5));
  const auto l = laplacian_matrix(z.graph);
  EXPECT_EQ(l.rowwise().sum().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(l.trace(), 2.0 * static_cast<double>(z.graph.size()));
}

TEST(Matrices, EccentricityMatrixOfCompleteGraphIsAdjacency) {
  for (Vertex n : {2, 5, 9})
    EXPECT_EQ(eccentricity_matrix(complete_graph(n)), adjacency_matrix(complete_graph(n)));
}

TEST(Matrices, EccentricityMatrixOfPath) {
  // P3: e = (2, 1, 2); only the end-to-end pair attains min eccentricity 2,
  // and the middle vertex keeps distance 1 to both ends.
  DenseMatrix<double> e(3, 3);
  e << 0, 1, 2, 1, 0, 1, 2, 1, 0;
  EXPECT_EQ(eccentricity_matrix(path_graph(3)), e);
}

TEST(Spectrum, CompleteGraphs) {
  for (Vertex n = 2; n <= 50; n += 6) {
    const auto s = symmetric_eigenvalues(adjacency_matrix(complete_graph(n)));
    ASSERT_EQ(s.clusters.size(), 2u);
    EXPECT_NEAR(s.clusters[0].value, n - 1, 1e-9);
    EXPECT_EQ(s.clusters[0].multiplicity, 1);
    EXPECT_NEAR(s.clusters[1].value, -1.0, 1e-9);
    EXPECT_EQ(s.clusters[1].multiplicity, n - 1);
  }
}

TEST(Spectrum, ZeroMatrixAndEnergy) {
  const auto zero = symmetric_eigenvalues(DenseMatrix<double>::Zero(4, 4));
  ASSERT_EQ(zero.clusters.size(), 1u);
  EXPECT_EQ(zero.clusters[0].multiplicity, 4);
  EXPECT_EQ(zero.count_near(0.0), 4);
  EXPECT_NEAR(graph_energy(symmetric_eigenvalues(adjacency_matrix(cycle_graph(4)))), 4.0, 1e-12);
  EXPECT_NEAR(graph_energy(symmetric_eigenvalues(adjacency_matrix(complete_graph(2)))), 2.0,
              1e-12);
}

TEST(Spectrum, LaplacianEnergy) {
  const auto k2 = symmetric_eigenvalues(laplacian_matrix(complete_graph(2)));
  EXPECT_NEAR(laplacian_energy(k2, 2, 1), 2.0, 1e-12);
  const auto e3 = symmetric_eigenvalues(laplacian_matrix(empty_graph(3)));
  EXPECT_NEAR(laplacian_energy(e3, 3, 0), 0.0, 1e-12);
}

TEST(Spectrum, ClustersAreSeparatedAndSumToSize) {
  const auto z = build_zero_divisor_graph(OddPrime(5));
  const auto s = symmetric_eigenvalues(adjacency_matrix(z.graph));
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s.clusters.size(); ++i) {
    total += s.clusters[i].multiplicity;
    if (i > 0)
      EXPECT_GT(s.clusters[i - 1].value - s.clusters[i].value, s.tolerance);
  }
  EXPECT_EQ(total, z.graph.order());
  for (Eigen::Index i = 1; i < s.size(); ++i)
    EXPECT_GE(s.values[i - 1], s.values[i]);
}

TEST(Spectrum, FromClustersRejectsNegativeMultiplicity) {
  EXPECT_THROW(Spectrum::from_clusters({{1.0, -1}}, 1e-6), std::invalid_argument);
  EXPECT_THROW(Spectrum::from_values(Eigen::VectorXd(0), 0.0), std::invalid_argument);
}

TEST(Eigensolvers, RejectNonSymmetric) {
  DenseMatrix<double> m(2, 2);
  m << 0, 1, 2, 0;
  EXPECT_THROW(symmetric_eigenvalues(m), std::invalid_argument);
  EXPECT_THROW(jacobi_eigenvalues(m), std::invalid_argument);
  EXPECT_THROW(symmetric_eigenvalues(DenseMatrix<double>(2, 3)), std::invalid_argument);
}

TEST(Eigensolvers, JacobiAgreesWithTridiagonalQr) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto m = random_symmetric(30, seed);
    const auto jac = jacobi_eigenvalues(m);
    const auto qr = symmetric_eigenvalues(m).values;
    EXPECT_LT((jac - qr).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Eigensolvers, TraceAndFrobeniusIdentities) {
  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    const auto m = random_symmetric(30, seed);
    const auto s = symmetric_eigenvalues(m).values;
    const double fro = m.squaredNorm();
    EXPECT_LE(std::abs(s.sum() - m.trace()), 1e-8 * std::max(1.0, std::abs(m.trace())));
    EXPECT_LE(std::abs(s.squaredNorm() - fro), 1e-8 * fro);
  }
}

TEST(Eigensolvers, ZeroDivisorGraphTraceIdentities) {
  for (std::int64_t p : {3, 5}) {
    const auto z = build_zero_divisor_graph(OddPrime(p));
    const auto s = symmetric_eigenvalues(adjacency_matrix(z.graph));
    const double m = static_cast<double>(z.graph.size());
    EXPECT_LE(std::abs(s.values.sum()), 1e-6);
    EXPECT_LE(std::abs(s.values.squaredNorm() - 2 * m), 1e-4);
    // tr A^3 = 6 * triangles; count triangles directly.
    std::int64_t triangles = 0;
    for (auto [i, j] : z.graph.edges())
      for (Vertex k = j + 1; k < z.graph.order(); ++k)
        triangles += z.graph.adjacent(i, k) && z.graph.adjacent(j, k);
    EXPECT_NEAR(s.values.array().cube().sum(), 6.0 * static_cast<double>(triangles),
                1e-6 * static_cast<double>(triangles));
  }
}

TEST(Eigensolvers, LaplacianIsPositiveSemidefiniteWithOneZero) {
  for (std::int64_t p : {3, 5}) {
    const auto z = build_zero_divisor_graph(OddPrime(p));
    const auto s = symmetric_eigenvalues(laplacian_matrix(z.graph));
    const double n = static_cast<double>(z.graph.order());
    EXPECT_GE(s.values.minCoeff(), -1e-8);
    EXPECT_EQ(s.count_near(0.0), 1);
    EXPECT_NEAR(s.values.sum(), 2.0 * static_cast<double>(z.graph.size()), 1e-4);
    EXPECT_GE(s.count_near(n), 1); // universal vertices
  }
}

TEST(Equitable, CompleteGraphSingleBlock) {
  VertexPartition part{{{0, 1, 2, 3, 4}}};
  const auto r = check_equitable(complete_graph(5), part);
  ASSERT_TRUE(std::holds_alternative<QuotientMatrix>(r));
  EXPECT_EQ(std::get<QuotientMatrix>(r).counts(0, 0), 4.0);
}

TEST(Equitable, PathSingleBlockFails) {
  VertexPartition part{{{0, 1, 2}}};
  const auto r = check_equitable(path_graph(3), part);
  ASSERT_TRUE(std::holds_alternative<EquitabilityViolation>(r));
  const auto &bad = std::get<EquitabilityViolation>(r);
  EXPECT_EQ(bad.vertex, 1);
  EXPECT_EQ(bad.neighbors, 2);
  EXPECT_EQ(bad.expected, 1);
}

TEST(Equitable, PathEndsAndMiddle) {
  VertexPartition part{{{0, 2}, {1}}};
  const auto r = check_equitable(path_graph(3), part);
  ASSERT_TRUE(std::holds_alternative<QuotientMatrix>(r));
  DenseMatrix<double> q(2, 2);
  q << 0, 1, 2, 0;
  EXPECT_EQ(std::get<QuotientMatrix>(r).counts, q);
}

TEST(Equitable, ZeroDivisorGraphQuotientAtThree) {
  const auto z = build_zero_divisor_graph(OddPrime(3));
  const auto r = check_equitable(z.graph, z.partition);
  ASSERT_TRUE(std::holds_alternative<QuotientMatrix>(r));
  EXPECT_EQ(std::get<QuotientMatrix>(r).counts, p3_quotient());
}

TEST(Equitable, QuotientEigenvaluesLieInFullSpectrum) {
  for (std::int64_t p : {3, 5, 7}) {
    const auto z = build_zero_divisor_graph(OddPrime(p));
    const auto r = check_equitable(z.graph, z.partition);
    ASSERT_TRUE(std::holds_alternative<QuotientMatrix>(r));
    const auto &q = std::get<QuotientMatrix>(r);
    // Row sums reproduce the class degrees.
    for (std::size_t b = 0; b < q.block_sizes.size(); ++b)
      EXPECT_EQ(q.counts.row(static_cast<Eigen::Index>(b)).sum(),
                z.graph.degree(z.partition.blocks[b].front()));
    const auto qs = quotient_eigenvalues(q.counts);
    const auto full = symmetric_eigenvalues(adjacency_matrix(z.graph));
    EXPECT_LT(qs.max_imaginary, 1e-6);
    EXPECT_TRUE(spectrum_contains(qs, full, 1e-6)) << "p = " << p;
  }
}

TEST(Quotient, CharacteristicPolynomial) {
  DenseMatrix<double> m(2, 2);
  m << 2, 1, 1, 2;
  const auto c = characteristic_polynomial(m);
  ASSERT_EQ(c.size(), 3);
  EXPECT_NEAR(c[0], 3.0, 1e-12);
  EXPECT_NEAR(c[1], -4.0, 1e-12);
  EXPECT_NEAR(c[2], 1.0, 1e-12);
  const auto s = quotient_eigenvalues(m);
  EXPECT_NEAR(s.values[0], 3.0, 1e-12);
  EXPECT_NEAR(s.values[1], 1.0, 1e-12);
}

TEST(Quotient, RejectsLargeOrNonSquare) {
  EXPECT_THROW(quotient_eigenvalues(DenseMatrix<double>::Zero(17, 17)), std::invalid_argument);
  EXPECT_THROW(quotient_eigenvalues(DenseMatrix<double>::Zero(2, 3)), std::invalid_argument);
}

TEST(Containment, RespectsMultiplicity) {
  EXPECT_TRUE(spectrum_contains(values({1.0}), values({2.0, 1.0, 0.0}), 1e-9));
  EXPECT_TRUE(spectrum_contains(values({1.0, 1.0}), values({1.0, 1.0, 0.0}), 1e-9));
  EXPECT_FALSE(spectrum_contains(values({1.0, 1.0}), values({2.0, 1.0, 0.0}), 1e-9));
  EXPECT_FALSE(spectrum_contains(values({1.5}), values({2.0, 1.0}), 1e-9));
  EXPECT_TRUE(spectrum_contains(values({1.0 + 1e-7}), values({1.0}), 1e-6));
  EXPECT_TRUE(spectrum_matches(values({3.0, -1.0}), values({-1.0, 3.0}), 1e-9));
  EXPECT_FALSE(spectrum_matches(values({3.0}), values({3.0, -1.0}), 1e-9));
}

TEST(SpectralRadius, UsesAbsoluteValue) {
  EXPECT_DOUBLE_EQ(spectral_radius(values({1.0, -3.0})), 3.0);
  EXPECT_DOUBLE_EQ(spectral_radius(Spectrum::from_values(Eigen::VectorXd(0), 1.0)), 0.0);
}
