#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "zdg/claims.hpp"
#include "zdg/oracle.hpp"

namespace zdg {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so serialized floats are stable.
double round12(double x);

/// "i j" per edge, i < j, ascending.
void write_edge_list(std::ostream &os, const Graph &g);

/// Undirected DOT; vertex label "b u + c v + d uv" and a `class` attribute.
void write_dot(std::ostream &os, const ZeroDivisorGraph &zdg);

/// Whitespace-separated rows.
void write_matrix_text(std::ostream &os, const DenseMatrix<double> &m);
Json matrix_json(const DenseMatrix<double> &m);

/// [{value, multiplicity}, ...]
Json spectrum_json(const Spectrum &s);

Json bounded_json(const BoundedValue &b);

/// n, m, degree census per class, invariants, indices, energies, quotient.
Json analysis_json(const OracleContext &ctx);

/// {p, claims: [{id, kind, claimed, computed, status, detail}], summary}
Json report_json(const ClaimReport &report);

/// Column names for write_sweep_header and write_sweep_row, in order.
std::vector<std::string> sweep_columns();
void write_sweep_header(std::ostream &os);
void write_sweep_row(std::ostream &os, const OracleContext &ctx, const ClaimReport &report);

} // namespace zdg
