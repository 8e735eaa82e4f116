#include "zdg/oracle.hpp"

namespace zdg {

namespace {

Spectrum spectrum_of(const DenseMatrix<double> &m, const OracleOptions &options) {
  return symmetric_eigenvalues(m, options.tolerance);
}

} // namespace

OracleContext build_oracle(OddPrime p, const OracleOptions &options) {
  OracleContext ctx{.zdg = build_zero_divisor_graph(p, options.max_p)};
  const Graph &g = ctx.zdg.graph;

  ctx.degrees = degree_sequence(g);
  ctx.distances = all_pairs_distances(g);
  ctx.diameter = zdg::diameter(ctx.distances);
  ctx.girth = zdg::girth(g);
  ctx.eccentricities = zdg::eccentricities(ctx.distances);
  ctx.clique = max_clique(g, options.budget);
  ctx.coloring = chromatic(g, ctx.clique, options.budget);
  ctx.vertex_connectivity = zdg::vertex_connectivity(g);
  ctx.edge_connectivity = zdg::edge_connectivity(g);
  ctx.min_degree = zdg::min_degree(g);
  ctx.indices = topological_indices(g, ctx.distances);

  ctx.adjacency = spectrum_of(adjacency_matrix(g), options);
  ctx.laplacian = spectrum_of(laplacian_matrix(g), options);
  ctx.eccentricity = spectrum_of(eccentricity_matrix(ctx.distances), options);
  ctx.energy = graph_energy(ctx.adjacency);
  ctx.laplacian_energy = zdg::laplacian_energy(ctx.laplacian, ctx.n(), ctx.m());

  ctx.quotient = check_equitable(g, ctx.zdg.partition);
  if (const auto *q = ctx.quotient_matrix())
    ctx.quotient_spectrum = quotient_eigenvalues(q->counts, options.tolerance);
  return ctx;
}

} // namespace zdg
