#include "zdg/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/Jacobi>

#include <functional>
#include <string>

namespace zdg {

namespace {

Eigen::VectorXd sorted_descending(Eigen::VectorXd v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<>());
  return v;
}

} // namespace

Spectrum Spectrum::from_values(Eigen::VectorXd values, double tolerance) {
  if (!(tolerance > 0.0))
    throw std::invalid_argument("spectrum tolerance must be positive");
  Spectrum s;
  s.values = sorted_descending(std::move(values));
  s.tolerance = tolerance;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= s.values.size(); ++i) {
    if (i < s.values.size() && s.values[i - 1] - s.values[i] <= tolerance)
      continue;
    const Eigen::Index len = i - start;
    s.clusters.push_back({s.values.segment(start, len).mean(), len});
    start = i;
  }
  return s;
}

Spectrum Spectrum::from_clusters(const std::vector<SpectrumCluster> &clusters,
                                 double tolerance) {
  std::int64_t total = 0;
  for (const auto &c : clusters) {
    if (c.multiplicity < 0)
      throw std::invalid_argument("negative multiplicity");
    total += c.multiplicity;
  }
  Eigen::VectorXd v(total);
  Eigen::Index k = 0;
  for (const auto &c : clusters)
    for (std::int64_t r = 0; r < c.multiplicity; ++r)
      v[k++] = c.value;
  return from_values(std::move(v), tolerance);
}

std::int64_t Spectrum::count_near(double x) const {
  return ((values.array() - x).abs() <= tolerance).count();
}

Spectrum symmetric_eigenvalues(const DenseMatrix<double> &m, std::optional<double> tolerance) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigenvalues of a non-square matrix");
  if (m != m.transpose())
    throw std::invalid_argument("matrix is not symmetric");
  const double tol = tolerance.value_or(default_tolerance(m));
  if (m.size() == 0)
    return Spectrum::from_values(Eigen::VectorXd(0), tol);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<double>> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver did not converge");
  return Spectrum::from_values(solver.eigenvalues(), tol);
}

Eigen::VectorXd jacobi_eigenvalues(DenseMatrix<double> m, int max_sweeps) {
  if (m.rows() != m.cols() || m != m.transpose())
    throw std::invalid_argument("Jacobi needs a symmetric matrix");
  const Eigen::Index n = m.rows();
  const double scale = std::max(m.norm(), 1.0);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double off = (m - DenseMatrix<double>(m.diagonal().asDiagonal())).norm();
    if (off <= 1e-15 * scale)
      return sorted_descending(m.diagonal());
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (m(p, q) == 0.0)
          continue;
        Eigen::JacobiRotation<double> rot;
        rot.makeJacobi(m, p, q);
        m.applyOnTheLeft(p, q, rot.adjoint());
        m.applyOnTheRight(p, q, rot);
        m(p, q) = m(q, p) = 0.0;
      }
  }
  throw std::runtime_error("Jacobi iteration did not converge");
}

double graph_energy(const Spectrum &s) { return s.values.cwiseAbs().sum(); }

double laplacian_energy(const Spectrum &s, std::int64_t n, std::int64_t m) {
  if (n <= 0)
    return 0.0;
  const double mean = 2.0 * static_cast<double>(m) / static_cast<double>(n);
  return (s.values.array() - mean).abs().sum();
}

double spectral_radius(const Spectrum &s) {
  return s.size() == 0 ? 0.0 : s.values.cwiseAbs().maxCoeff();
}

EquitableResult check_equitable(const Graph &g, const VertexPartition &partition) {
  const auto block = partition.block_of(g.order());
  const std::size_t k = partition.block_count();
  QuotientMatrix q;
  q.counts = DenseMatrix<double>::Zero(k, k);
  for (const auto &b : partition.blocks)
    q.block_sizes.push_back(static_cast<std::int64_t>(b.size()));

  std::vector<std::int64_t> tally(k);
  for (std::size_t i = 0; i < k; ++i) {
    bool first = true;
    for (Vertex v : partition.blocks[i]) {
      std::ranges::fill(tally, 0);
      for (Vertex y : g.neighbors(v))
        ++tally[block[y]];
      for (std::size_t j = 0; j < k; ++j) {
        if (first) {
          q.counts(i, j) = static_cast<double>(tally[j]);
        } else if (q.counts(i, j) != static_cast<double>(tally[j])) {
          return EquitabilityViolation{v, i, j, tally[j],
                                       static_cast<std::int64_t>(q.counts(i, j))};
        }
      }
      first = false;
    }
  }
  return q;
}

Eigen::VectorXd characteristic_polynomial(const DenseMatrix<double> &m) {
  // Faddeev-LeVerrier in long double; exact for small integer matrices.
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = m.rows();
  const Mat a = m.cast<long double>();
  Eigen::VectorXd c(n + 1);
  c[n] = 1.0;
  Mat mk = Mat::Zero(n, n);
  long double prev = 1.0L;
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = a * mk + prev * Mat::Identity(n, n);
    prev = -(a * mk).trace() / static_cast<long double>(k);
    c[n - k] = static_cast<double>(prev);
  }
  return c;
}

Spectrum quotient_eigenvalues(const DenseMatrix<double> &q, std::optional<double> tolerance) {
  if (q.rows() != q.cols())
    throw std::invalid_argument("quotient matrix must be square");
  if (q.rows() > 16)
    throw std::invalid_argument("quotient matrix larger than 16");
  const double tol = tolerance.value_or(default_tolerance(q));
  if (q.size() == 0)
    return Spectrum::from_values(Eigen::VectorXd(0), tol);

  Eigen::EigenSolver<DenseMatrix<double>> solver;
  solver.setMaxIterations(1000);
  solver.compute(q, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Hessenberg QR did not converge on the quotient matrix");
  const Eigen::VectorXcd roots = solver.eigenvalues();

  const Eigen::VectorXd poly = characteristic_polynomial(q);
  for (Eigen::Index r = 0; r < roots.size(); ++r) {
    std::complex<double> value = 0.0, power = 1.0;
    double scale = 0.0;
    for (Eigen::Index k = 0; k < poly.size(); ++k) {
      value += poly[k] * power;
      scale += std::abs(poly[k]) * std::abs(power);
      power *= roots[r];
    }
    if (std::abs(value) > 1e-6 * std::max(1.0, scale))
      throw std::runtime_error("eigenvalue " + std::to_string(roots[r].real()) +
                               " fails the characteristic polynomial residual check");
  }

  Spectrum s = Spectrum::from_values(roots.real(), tol);
  s.max_imaginary = roots.imag().cwiseAbs().maxCoeff();
  return s;
}

bool spectrum_contains(const Spectrum &sub, const Spectrum &full, double tolerance) {
  // Both descending; greedy matching over sorted values is optimal for
  // equal-width windows.
  Eigen::Index j = 0;
  for (Eigen::Index i = 0; i < sub.size(); ++i) {
    const double x = sub.values[i];
    while (j < full.size() && full.values[j] > x + tolerance)
      ++j;
    if (j == full.size() || full.values[j] < x - tolerance)
      return false;
    ++j;
  }
  return true;
}

bool spectrum_matches(const Spectrum &a, const Spectrum &b, double tolerance) {
  return a.size() == b.size() && spectrum_contains(a, b, tolerance);
}

} // namespace zdg
