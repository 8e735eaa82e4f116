#include "zdg/report.hpp"

#include <cstdio>
#include <string>

namespace zdg {

namespace {

std::string format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json optional_json(std::optional<std::int32_t> x) {
  if (x)
    return *x;
  return nullptr;
}

Json rational_json(const Rational &r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json claimed_json(const ClaimResult &r) {
  if (const auto *q = std::get_if<Rational>(&r.claimed)) {
    if (r.kind == ClaimKind::Rational)
      return rational_json(*q);
    if (q->denominator() == 1)
      return q->numerator();
    return rational_json(*q);
  }
  if (const auto *d = std::get_if<double>(&r.claimed))
    return round12(*d);
  const auto &s = std::get<ClaimedSpectrum>(r.claimed);
  Json parts = Json::array();
  for (const auto &part : s.parts)
    parts.push_back({{"value", round12(part.value)}, {"multiplicity", part.multiplicity}});
  Json out = {{"parts", parts}, {"multiplicity_sum", s.multiplicity_sum()}};
  if (s.quotient.size() != 0)
    out["quotient"] = matrix_json(s.quotient);
  return out;
}

Json computed_json(const ComputedValue &v) {
  return std::visit(
      [](const auto &x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return nullptr;
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return x;
        else if constexpr (std::is_same_v<T, BoundedValue>)
          return bounded_json(x);
        else if constexpr (std::is_same_v<T, double>)
          return round12(x);
        else
          return spectrum_json(x);
      },
      v);
}

std::string csv_optional(std::optional<std::int32_t> x) {
  return x ? std::to_string(*x) : "inf";
}

} // namespace

double round12(double x) { return std::stod(format12(x)); }

void write_edge_list(std::ostream &os, const Graph &g) {
  for (auto [i, j] : g.edges())
    os << i << ' ' << j << '\n';
}

void write_dot(std::ostream &os, const ZeroDivisorGraph &zdg) {
  const Graph &g = zdg.graph;
  os << "graph zero_divisor_p" << zdg.p.value() << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    const RingElement &x = zdg.labeling.element(v);
    os << "  " << v << " [label=\"" << to_string(x) << "\", class=\"" << class_name(classify(x))
       << "\"];\n";
  }
  for (auto [i, j] : g.edges())
    os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
}

void write_matrix_text(std::ostream &os, const DenseMatrix<double> &m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << format12(m(i, j));
    os << '\n';
  }
}

Json matrix_json(const DenseMatrix<double> &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(round12(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json spectrum_json(const Spectrum &s) {
  Json out = Json::array();
  for (const auto &c : s.clusters)
    out.push_back({{"value", round12(c.value)}, {"multiplicity", c.multiplicity}});
  return out;
}

Json bounded_json(const BoundedValue &b) {
  if (b.exact())
    return b.lower;
  return {{"lower", b.lower}, {"upper", b.upper}};
}

Json analysis_json(const OracleContext &ctx) {
  Json census = Json::object();
  const auto &blocks = ctx.zdg.partition.blocks;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Json degrees = Json::object();
    std::map<Vertex, std::int64_t> hist;
    for (Vertex v : blocks[i])
      ++hist[ctx.degrees[v]];
    for (auto [d, k] : hist)
      degrees[std::to_string(d)] = k;
    census[std::string(class_name(kAllClasses[i]))] = {{"size", blocks[i].size()},
                                                       {"degrees", degrees}};
  }
  Json out = {
      {"p", ctx.p().value()},
      {"n", ctx.n()},
      {"m", ctx.m()},
      {"degree_census", census},
      {"min_degree", ctx.min_degree},
      {"diameter", optional_json(ctx.diameter)},
      {"girth", optional_json(ctx.girth)},
      {"vertex_connectivity", ctx.vertex_connectivity},
      {"edge_connectivity", ctx.edge_connectivity},
      {"clique", bounded_json(ctx.clique.value)},
      {"chromatic", bounded_json(ctx.coloring.value)},
      {"wiener", ctx.indices.wiener},
      {"randic", round12(ctx.indices.randic)},
      {"zagreb_m1", ctx.indices.zagreb_m1},
      {"zagreb_m2", ctx.indices.zagreb_m2},
      {"energy", round12(ctx.energy)},
      {"laplacian_energy", round12(ctx.laplacian_energy)},
      {"spectral_radius", round12(spectral_radius(ctx.adjacency))},
      {"laplacian_spectral_radius", round12(spectral_radius(ctx.laplacian))},
      {"spectral_tolerance",
       {{"adjacency", ctx.adjacency.tolerance},
        {"laplacian", ctx.laplacian.tolerance},
        {"eccentricity", ctx.eccentricity.tolerance}}},
      {"adjacency_spectrum", spectrum_json(ctx.adjacency)},
      {"laplacian_spectrum", spectrum_json(ctx.laplacian)},
      {"eccentricity_spectrum", spectrum_json(ctx.eccentricity)},
  };
  if (const auto *q = ctx.quotient_matrix()) {
    out["quotient"] = {{"equitable", true},
                       {"matrix", matrix_json(q->counts)},
                       {"eigenvalues", spectrum_json(*ctx.quotient_spectrum)}};
  } else {
    const auto &bad = std::get<EquitabilityViolation>(ctx.quotient);
    out["quotient"] = {{"equitable", false},
                       {"vertex", bad.vertex},
                       {"target_block", bad.target_block}};
  }
  return out;
}

Json report_json(const ClaimReport &report) {
  Json claims = Json::array();
  for (const auto &r : report.results)
    claims.push_back({{"id", r.id},
                      {"kind", kind_name(r.kind)},
                      {"claimed", claimed_json(r)},
                      {"computed", computed_json(r.computed)},
                      {"status", status_name(r.status)},
                      {"detail", r.detail}});
  Json summary = {{"MATCH", report.count(ClaimStatus::Match)},
                  {"MISMATCH", report.count(ClaimStatus::Mismatch)},
                  {"NOT_COMPARABLE", report.count(ClaimStatus::NotComparable)},
                  {"total", report.results.size()}};
  return {{"p", report.p}, {"claims", claims}, {"summary", summary}};
}

std::vector<std::string> sweep_columns() {
  std::vector<std::string> cols = {
      "p",        "n",         "m",         "diameter",        "girth",
      "clique_lower", "clique_upper", "chromatic_lower", "chromatic_upper",
      "vertex_connectivity", "edge_connectivity", "min_degree",
      "wiener",   "randic",    "zagreb_m1", "zagreb_m2",       "energy",
      "laplacian_energy", "spectral_radius", "laplacian_spectral_radius"};
  for (const auto &c : claim_registry())
    cols.push_back("status:" + c.id);
  return cols;
}

void write_sweep_header(std::ostream &os) {
  const auto cols = sweep_columns();
  for (std::size_t i = 0; i < cols.size(); ++i)
    os << (i ? "," : "") << cols[i];
  os << '\n';
}

void write_sweep_row(std::ostream &os, const OracleContext &ctx, const ClaimReport &report) {
  os << ctx.p().value() << ',' << ctx.n() << ',' << ctx.m() << ','
     << csv_optional(ctx.diameter) << ',' << csv_optional(ctx.girth) << ','
     << ctx.clique.value.lower << ',' << ctx.clique.value.upper << ','
     << ctx.coloring.value.lower << ',' << ctx.coloring.value.upper << ','
     << ctx.vertex_connectivity << ',' << ctx.edge_connectivity << ',' << ctx.min_degree << ','
     << ctx.indices.wiener << ',' << format12(ctx.indices.randic) << ','
     << ctx.indices.zagreb_m1 << ',' << ctx.indices.zagreb_m2 << ','
     << format12(ctx.energy) << ',' << format12(ctx.laplacian_energy) << ','
     << format12(spectral_radius(ctx.adjacency)) << ','
     << format12(spectral_radius(ctx.laplacian));
  for (const auto &r : report.results)
    os << ',' << status_name(r.status);
  os << '\n';
}

} // namespace zdg
