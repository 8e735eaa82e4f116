#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

template <class Scalar = double>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar = double>
DenseMatrix<Scalar> adjacency_matrix(const Graph &g) {
  const Vertex n = g.order();
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(n, n);
  for (auto [i, j] : g.edges())
    a(i, j) = a(j, i) = Scalar(1);
  return a;
}

/// D - A.
template <class Scalar = double>
DenseMatrix<Scalar> laplacian_matrix(const Graph &g) {
  DenseMatrix<Scalar> l = -adjacency_matrix<Scalar>(g);
  for (Vertex i = 0; i < g.order(); ++i)
    l(i, i) = Scalar(g.degree(i));
  return l;
}

/// Keeps d(i, j) where it equals min(e(i), e(j)), zero elsewhere.
/// Throws DisconnectedGraph.
template <class Scalar = double>
DenseMatrix<Scalar> eccentricity_matrix(const DistanceMatrix &d) {
  const auto ecc = eccentricities(d);
  const auto n = d.rows();
  DenseMatrix<Scalar> e = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && d(i, j) == std::min(ecc[i], ecc[j]))
        e(i, j) = Scalar(d(i, j));
  return e;
}

template <class Scalar = double>
DenseMatrix<Scalar> eccentricity_matrix(const Graph &g) {
  return eccentricity_matrix<Scalar>(all_pairs_distances(g));
}

/// 1e-6 * max(1, max |entry|).
template <class Derived>
double default_tolerance(const Eigen::MatrixBase<Derived> &m) {
  const double largest = m.size() == 0 ? 0.0 : double(m.cwiseAbs().maxCoeff());
  return 1e-6 * std::max(1.0, largest);
}

struct SpectrumCluster {
  double value = 0.0;
  std::int64_t multiplicity = 0;
};

/// Eigenvalues in descending order plus chain clusters under `tolerance`
/// (consecutive values within tolerance share a cluster; the representative
/// is the cluster mean).
struct Spectrum {
  Eigen::VectorXd values;
  std::vector<SpectrumCluster> clusters;
  double tolerance = 0.0;
  double max_imaginary = 0.0;

  static Spectrum from_values(Eigen::VectorXd values, double tolerance);
  /// Expands (value, multiplicity) pairs; multiplicities must be non-negative.
  static Spectrum from_clusters(const std::vector<SpectrumCluster> &clusters,
                                double tolerance);

  Eigen::Index size() const noexcept { return values.size(); }
  /// Number of eigenvalues with |value| <= tolerance.
  std::int64_t count_near(double x) const;
};

/// Dense symmetric eigenvalues (Eigen's tridiagonal QR). Rejects matrices
/// that are not exactly symmetric.
Spectrum symmetric_eigenvalues(const DenseMatrix<double> &m,
                               std::optional<double> tolerance = {});

/// Cyclic Jacobi rotations, independent of symmetric_eigenvalues. Values
/// descending.
Eigen::VectorXd jacobi_eigenvalues(DenseMatrix<double> m, int max_sweeps = 100);

double graph_energy(const Spectrum &s);
double laplacian_energy(const Spectrum &s, std::int64_t n, std::int64_t m);
double spectral_radius(const Spectrum &s);

struct QuotientMatrix {
  DenseMatrix<double> counts;
  std::vector<std::int64_t> block_sizes;
};

struct EquitabilityViolation {
  Vertex vertex = -1;
  std::size_t vertex_block = 0;
  std::size_t target_block = 0;
  std::int64_t neighbors = 0;
  std::int64_t expected = 0;
};

using EquitableResult = std::variant<QuotientMatrix, EquitabilityViolation>;

/// Succeeds iff every vertex of block i has the same number of neighbours in
/// block j, for all i and j.
EquitableResult check_equitable(const Graph &g, const VertexPartition &partition);

/// Coefficients c_0..c_n of det(xI - M), leading coefficient last.
Eigen::VectorXd characteristic_polynomial(const DenseMatrix<double> &m);

/// Eigenvalues of a small (order <= 16) general matrix by Hessenberg QR;
/// real parts, descending. Throws std::runtime_error on non-convergence or
/// when a root fails the characteristic-polynomial residual check.
Spectrum quotient_eigenvalues(const DenseMatrix<double> &q,
                              std::optional<double> tolerance = {});

/// Multiplicity-respecting matching: every value of `sub` pairs with a
/// distinct value of `full` within `tolerance`.
bool spectrum_contains(const Spectrum &sub, const Spectrum &full, double tolerance);

/// Same size and mutually contained.
bool spectrum_matches(const Spectrum &a, const Spectrum &b, double tolerance);

} // namespace zdg
