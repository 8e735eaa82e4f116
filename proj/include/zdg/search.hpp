#pragma once

#include <cstdint>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchBudget {
  std::uint64_t node_limit = kDefaultNodeBudget;
};

/// Result of a budgeted exact search: exact when lower == upper, otherwise a
/// certified interval containing the true value.
struct BoundedValue {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return lower == upper; }
  bool contains(std::int64_t x) const noexcept { return lower <= x && x <= upper; }
};

struct CliqueResult {
  BoundedValue value;
  std::vector<Vertex> witness; ///< a clique of size value.lower
};

/// Branch and bound over candidate sets with a greedy-colouring bound.
CliqueResult max_clique(const Graph &g, SearchBudget budget = {});
inline BoundedValue clique_number(const Graph &g, SearchBudget budget = {}) {
  return max_clique(g, budget).value;
}

/// DSATUR greedy colouring; returns one colour per vertex, colours from 0.
std::vector<std::int32_t> dsatur_coloring(const Graph &g);

bool is_proper_coloring(const Graph &g, const std::vector<std::int32_t> &colors);

struct ColoringResult {
  BoundedValue value;
  std::vector<std::int32_t> witness; ///< a proper colouring using value.upper colours
};

/// Clique lower bound, DSATUR upper bound, then DSATUR backtracking when they
/// differ. The clique search and the backtracking each get `budget`.
ColoringResult chromatic(const Graph &g, SearchBudget budget = {});
/// Same, reusing a clique search already run on g.
ColoringResult chromatic(const Graph &g, const CliqueResult &clique, SearchBudget budget = {});
inline BoundedValue chromatic_number(const Graph &g, SearchBudget budget = {}) {
  return chromatic(g, budget).value;
}

} // namespace zdg
