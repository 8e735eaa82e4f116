#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zdg/connectivity.hpp"
#include "zdg/graph.hpp"
#include "zdg/indices.hpp"
#include "zdg/search.hpp"
#include "zdg/spectra.hpp"

namespace zdg {

struct OracleOptions {
  SearchBudget budget;
  /// Absolute clustering tolerance applied to every spectrum; when unset each
  /// matrix uses default_tolerance.
  std::optional<double> tolerance;
  std::optional<std::int64_t> max_p;
};

/// Everything computed from first principles for one prime. Read-only once
/// built.
struct OracleContext {
  ZeroDivisorGraph zdg;
  std::vector<Vertex> degrees{};
  DistanceMatrix distances{};
  std::optional<std::int32_t> diameter{};
  std::optional<std::int32_t> girth{};
  std::vector<std::int32_t> eccentricities{};
  CliqueResult clique{};
  ColoringResult coloring{};
  std::int32_t vertex_connectivity = 0;
  std::int32_t edge_connectivity = 0;
  std::int32_t min_degree = 0;
  TopologicalIndices indices{};
  Spectrum adjacency{};
  Spectrum laplacian{};
  Spectrum eccentricity{};
  EquitableResult quotient{};
  std::optional<Spectrum> quotient_spectrum{};
  double energy = 0.0;
  double laplacian_energy = 0.0;

  OddPrime p() const { return zdg.p; }
  std::int64_t n() const { return zdg.graph.order(); }
  std::int64_t m() const { return zdg.graph.size(); }
  const QuotientMatrix *quotient_matrix() const { return std::get_if<QuotientMatrix>(&quotient); }
};

OracleContext build_oracle(OddPrime p, const OracleOptions &options = {});

} // namespace zdg
