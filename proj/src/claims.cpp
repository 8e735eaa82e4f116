#include "zdg/claims.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zdg {

std::string_view kind_name(ClaimKind k) noexcept {
  switch (k) {
  case ClaimKind::Integer:
    return "integer";
  case ClaimKind::Rational:
    return "rational";
  case ClaimKind::Real:
    return "real";
  case ClaimKind::Spectrum:
    return "spectrum";
  case ClaimKind::PerClass:
    return "per-class-map";
  }
  return "?";
}

std::string_view status_name(ClaimStatus s) noexcept {
  switch (s) {
  case ClaimStatus::Match:
    return "MATCH";
  case ClaimStatus::Mismatch:
    return "MISMATCH";
  case ClaimStatus::NotComparable:
    return "NOT_COMPARABLE";
  }
  return "?";
}

std::int64_t ClaimedSpectrum::multiplicity_sum() const {
  std::int64_t total = quotient.rows();
  for (const auto &part : parts)
    total += part.multiplicity;
  return total;
}

namespace {

Rational ipow(std::int64_t p, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i)
    r *= p;
  return Rational(r);
}

ClaimedValue integer(std::int64_t x) { return Rational(x); }

/// Quotient matrix of the stated adjacency-spectrum theorem, verbatim.
DenseMatrix<double> stated_adjacency_quotient(std::int64_t p) {
  const double a = double(p - 2), b = double(p - 1), b2 = b * b, b3 = b2 * b;
  DenseMatrix<double> q(7, 7);
  q << a, 0, b, 0, b2, 0, 0,     //
      0, a, b, 0, 0, b2, 0,      //
      b, b, a, b2, b2, b2, b3,   //
      0, 0, b, 0, 0, 0, 0,       //
      b, 0, b, 0, 0, 0, 0,       //
      0, b, b, 0, 0, 0, 0,       //
      0, 0, b, 0, 0, 0, 0;
  return q;
}

/// Quotient matrix stated for the eccentricity matrix, verbatim.
DenseMatrix<double> stated_eccentricity_quotient(std::int64_t p) {
  const double a = double(p - 2), b = double(p - 1), b2 = b * b, b3 = b2 * b;
  DenseMatrix<double> q(7, 7);
  q << 0, 2 * b, b, 2 * b2, 0, 2 * b2, 2 * b3,        //
      2 * b, 0, b, 2 * b2, 2 * b2, 0, 2 * b3,         //
      b, b, a, b2, b2, b2, 2 * b3,                    //
      2 * b, 2 * b, b, 2 * b2, 2 * b2, 2 * b2, 2 * b3, //
      0, 2 * b, b, 2 * b2, 2 * b2, 2 * b2, 2 * b3,    //
      2 * b, 0, b, 2 * b2, 2 * b2, 2 * b2, 2 * b3,    //
      2 * b, 2 * b, b, 2 * b2, 2 * b2, 2 * b2, 2 * b3;
  return q;
}

ClaimedSpectrum stated_laplacian_spectrum(std::int64_t p) {
  const std::int64_t q = p - 1;
  return {{{0.0, 1},
           {double(q), q * q * q + q * q + 1},
           {double(2 * q), 2 * q * q - 2},
           {double(p * p - 1), 2 * q},
           {double(p * p * p - 1), q}},
          {}};
}

std::string to_string(const Rational &r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1)
    os << '/' << r.denominator();
  return os.str();
}

struct RegistryBuilder {
  std::vector<Claim> claims;

  void add(std::string id, ClaimKind kind, std::string anchor,
           std::function<ClaimedValue(OddPrime)> f,
           std::function<std::string(OddPrime)> note = {}) {
    Claim c{id, id, kind, std::move(anchor), std::nullopt, std::nullopt, std::move(f),
            std::move(note)};
    claims.push_back(std::move(c));
  }

  void add_per_class(const std::string &group, ZdClass t, std::string anchor,
                     std::function<ClaimedValue(OddPrime)> f) {
    Claim c{group + "." + std::string(class_name(t)), group, ClaimKind::PerClass,
            std::move(anchor), std::nullopt, t, std::move(f), {}};
    claims.push_back(std::move(c));
  }

  void add_example(std::string id, ClaimKind kind, std::string anchor, std::int64_t p,
                   ClaimedValue v) {
    Claim c{id,           id, kind, std::move(anchor), p, std::nullopt,
            [v](OddPrime) { return v; }, {}};
    claims.push_back(std::move(c));
  }
};

std::vector<Claim> make_registry() {
  RegistryBuilder r;
  using K = ClaimKind;

  r.add("vertex_count", K::Integer, "vertex set: $p^3-1$",
        [](OddPrime p) { return integer(p * p * p - 1); });
  r.add("edge_count", K::Integer, "edge count: \\frac{1}{2}(2p^4+2p^3-11p^2+5p+2)",
        [](OddPrime p) -> ClaimedValue {
          return (2 * ipow(p, 4) + 2 * ipow(p, 3) - 11 * ipow(p, 2) + 5 * ipow(p, 1) + 2) /
                 Rational(2);
        });
  r.add("diameter", K::Integer, "diameter theorem: diam(\\Gamma(R))=2",
        [](OddPrime) { return integer(2); });
  r.add("clique_number", K::Integer, "clique theorem: \\omega(\\Gamma(R)) = 2p-2",
        [](OddPrime p) { return integer(2 * p - 2); });
  r.add("chromatic_number", K::Integer, "chromatic theorem: \\chi(\\Gamma(R)) = 2p-1",
        [](OddPrime p) { return integer(2 * p - 1); });
  r.add("girth", K::Integer, "girth theorem: gr(\\Gamma(R)) = 3",
        [](OddPrime) { return integer(3); });
  r.add("vertex_connectivity", K::Integer, "connectivity theorem: \\kappa(\\Gamma(R))=p-1",
        [](OddPrime p) { return integer(p - 1); },
        [](OddPrime p) {
          return "the supporting argument states delta = p-1 = " + std::to_string(p - 1) +
                 " while the stated degree list has minimum p^2-2 = " +
                 std::to_string(p * p - 2);
        });
  r.add("edge_connectivity", K::Integer, "edge connectivity theorem: \\lambda(\\Gamma(R))=p-1",
        [](OddPrime p) { return integer(p - 1); });

  const std::string deg = "degree list: ";
  r.add_per_class("class_degrees", ZdClass::U, deg + "a\\in A_u, d_a=p^2-2",
                  [](OddPrime p) { return integer(p * p - 2); });
  r.add_per_class("class_degrees", ZdClass::V, deg + "a\\in A_{v}, d_a=p^2-2",
                  [](OddPrime p) { return integer(p * p - 2); });
  r.add_per_class("class_degrees", ZdClass::UV, deg + "a\\in A_{uv}, d_a=p^3-2",
                  [](OddPrime p) { return integer(p * p * p - 2); });
  r.add_per_class("class_degrees", ZdClass::UPlusV, deg + "a\\in A_{u+v}, d_a=p-1",
                  [](OddPrime p) { return integer(p - 1); });
  r.add_per_class("class_degrees", ZdClass::UPlusUV, deg + "a\\in A_{u+uv}, d_a=2p-2",
                  [](OddPrime p) { return integer(2 * p - 2); });
  r.add_per_class("class_degrees", ZdClass::VPlusUV, deg + "a\\in A_{v+uv}, d_a=2p-2",
                  [](OddPrime p) { return integer(2 * p - 2); });
  r.add_per_class("class_degrees", ZdClass::UPlusVPlusUV, deg + "a\\in A_{u+v+uv}, d_a=p-1",
                  [](OddPrime p) { return integer(p - 1); });

  r.add("wiener", K::Rational, "Wiener theorem: \\dfrac{2p^6-26p^4+32p^3-7p^2-13p+12}{2}",
        [](OddPrime p) -> ClaimedValue {
          return (2 * ipow(p, 6) - 26 * ipow(p, 4) + 32 * ipow(p, 3) - 7 * ipow(p, 2) -
                  13 * ipow(p, 1) + 12) /
                 Rational(2);
        });
  r.add("randic", K::Real,
        "Randic theorem: (p-1)(p-2)\\left(\\frac{1}{p^2-2}+\\frac{1}{2(p^3-2)}\\right)"
        "+\\frac{2(p-1)^2}{\\sqrt{(p^2-2)(p^3-2)}}+\\frac{(p-1)^3}{\\sqrt{2(p-1)}}"
        "\\left(\\frac{3}{\\sqrt{p^3-2}}+\\frac{2}{\\sqrt{p^2-2}}\\right)"
        "+\\frac{(p-1)^4}{\\sqrt{(p-1)(p^3-2)}}",
        [](OddPrime prime) -> ClaimedValue {
          const double p = double(prime.value());
          const double q = p - 1, a = p * p - 2, b = p * p * p - 2;
          return q * (p - 2) * (1.0 / a + 1.0 / (2.0 * b)) + 2.0 * q * q / std::sqrt(a * b) +
                 q * q * q / std::sqrt(2.0 * q) * (3.0 / std::sqrt(b) + 2.0 / std::sqrt(a)) +
                 q * q * q * q / std::sqrt(q * b);
        });
  r.add("zagreb_m1", K::Integer,
        "first Zagreb theorem: M_1(\\Gamma(R))=p^7-p^6+2p^5+8p^4-12p^3-4p^2+26p-14",
        [](OddPrime p) -> ClaimedValue {
          return ipow(p, 7) - ipow(p, 6) + 2 * ipow(p, 5) + 8 * ipow(p, 4) -
                 12 * ipow(p, 3) - 4 * ipow(p, 2) + 26 * ipow(p, 1) - 14;
        });
  r.add("zagreb_m2", K::Rational,
        "second Zagreb theorem: (p-1)\\left(p^7+6p^6-\\frac{43}{2}p^5+\\frac{47}{2}p^4"
        "+3p^3-5p^2+24p-4\\right)",
        [](OddPrime p) -> ClaimedValue {
          return Rational(p - 1) * (ipow(p, 7) + 6 * ipow(p, 6) -
                                    Rational(43, 2) * ipow(p, 5) +
                                    Rational(47, 2) * ipow(p, 4) + 3 * ipow(p, 3) -
                                    5 * ipow(p, 2) + 24 * ipow(p, 1) - 4);
        });

  r.add("adjacency_rank", K::Integer, "adjacency rank: rank of A(\\Gamma(R)) is 3p",
        [](OddPrime p) { return integer(3 * p); });
  r.add("adjacency_nullity", K::Integer, "adjacency nullity: p^3-3p-1",
        [](OddPrime p) { return integer(p * p * p - 3 * p - 1); },
        [](OddPrime p) {
          return "the adjacency spectrum theorem gives zero multiplicity p^2-3p-2 = " +
                 std::to_string(p * p - 3 * p - 2);
        });
  r.add("adjacency_spectrum", K::Spectrum,
        "adjacency spectrum theorem: -1^{3(p-2)}, 0^{p^2-3p-2}, eigenvalues of the 7x7 "
        "quotient Q",
        [](OddPrime p) -> ClaimedValue {
          return ClaimedSpectrum{{{-1.0, 3 * (p - 2)}, {0.0, p * p - 3 * p - 2}},
                                 stated_adjacency_quotient(p)};
        },
        [](OddPrime p) {
          return "the rank statement gives zero multiplicity p^3-3p-1 = " +
                 std::to_string(p * p * p - 3 * p - 1);
        });
  r.add("laplacian_spectrum", K::Spectrum,
        "Laplacian spectrum: 0^1, (p-1)^{(p-1)^3+(p-1)^2+1}, (2p-2)^{2(p-1)^2-2}, "
        "(p^2-1)^{2p-2}, (p^3-1)^{p-1}",
        [](OddPrime p) -> ClaimedValue { return stated_laplacian_spectrum(p); });
  r.add("laplacian_energy", K::Rational,
        "Laplacian energy theorem: \\dfrac{2(p-1)(p^5+3p^4-3p^3-13p^2+18p+3)}{p^2+p+1}",
        [](OddPrime p) -> ClaimedValue {
          return Rational(2 * (p - 1)) *
                 (ipow(p, 5) + 3 * ipow(p, 4) - 3 * ipow(p, 3) - 13 * ipow(p, 2) +
                  18 * ipow(p, 1) + 3) /
                 Rational(p * p + p + 1);
        },
        [](OddPrime p) {
          return p == 3 ? std::string("the worked example for p = 3 states 452/13") : "";
        });
  r.add("spectral_radius", K::Integer, "spectral radius theorem: \\rho(\\Gamma(R)) = p^2(p-1)",
        [](OddPrime p) { return integer(p * p * (p - 1)); });
  r.add("laplacian_spectral_radius", K::Integer,
        "spectral radius theorem: \\mu(\\Gamma(R))=p^3 - 1",
        [](OddPrime p) { return integer(p * p * p - 1); });

  const std::string ecc = "eccentricities: ";
  for (ZdClass t : kAllClasses)
    r.add_per_class("eccentricity_values", t,
                    ecc + (t == ZdClass::UV ? "a \\in A_{uv}, e(a)=1" : "a \\notin A_{uv}, e(a)=2"),
                    [t](OddPrime) { return integer(t == ZdClass::UV ? 1 : 2); });
  r.add("eccentricity_spectrum", K::Spectrum,
        "eccentricity spectrum: -1^{p-2}, 0^{p^3-p-6}, eigenvalues of the stated 7x7 Q",
        [](OddPrime p) -> ClaimedValue {
          return ClaimedSpectrum{{{-1.0, p - 2}, {0.0, p * p * p - p - 6}},
                                 stated_eccentricity_quotient(p)};
        });

  r.add_example("adjacency_nullity_example", K::Integer,
                "worked example p = 3: zero eigenvalue with multiplicity 16", 3, integer(16));
  r.add_example("laplacian_energy_example", K::Rational,
                "worked example p = 3: LE(\\Gamma(R)) = \\frac{452}{13}", 3, Rational(452, 13));
  return r.claims;
}

bool close(double claimed, double computed) {
  return std::abs(claimed - computed) <= kClaimRelTolerance * std::max(1.0, std::abs(claimed));
}

double as_double(const Rational &r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

ComputedValue computed_for(const Claim &claim, const OracleContext &ctx) {
  const std::string &g = claim.group;
  auto opt = [](std::optional<std::int32_t> x) -> ComputedValue {
    if (x)
      return std::int64_t{*x};
    return std::monostate{};
  };
  if (g == "vertex_count")
    return ctx.n();
  if (g == "edge_count")
    return ctx.m();
  if (g == "diameter")
    return opt(ctx.diameter);
  if (g == "girth")
    return opt(ctx.girth);
  if (g == "clique_number")
    return ctx.clique.value;
  if (g == "chromatic_number")
    return ctx.coloring.value;
  if (g == "vertex_connectivity")
    return std::int64_t{ctx.vertex_connectivity};
  if (g == "edge_connectivity")
    return std::int64_t{ctx.edge_connectivity};
  if (g == "class_degrees" || g == "eccentricity_values") {
    const auto &block = ctx.zdg.partition.blocks[static_cast<std::size_t>(*claim.zd_class)];
    std::int64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::int64_t x = g == "class_degrees" ? ctx.degrees[block[i]]
                                                 : ctx.eccentricities[block[i]];
      lo = i == 0 ? x : std::min(lo, x);
      hi = i == 0 ? x : std::max(hi, x);
    }
    if (lo == hi)
      return lo;
    return BoundedValue{lo, hi, 0};
  }
  if (g == "wiener")
    return ctx.indices.wiener;
  if (g == "randic")
    return ctx.indices.randic;
  if (g == "zagreb_m1")
    return ctx.indices.zagreb_m1;
  if (g == "zagreb_m2")
    return ctx.indices.zagreb_m2;
  if (g == "adjacency_rank")
    return ctx.n() - ctx.adjacency.count_near(0.0);
  if (g == "adjacency_nullity" || g == "adjacency_nullity_example")
    return ctx.adjacency.count_near(0.0);
  if (g == "adjacency_spectrum")
    return ctx.adjacency;
  if (g == "laplacian_spectrum")
    return ctx.laplacian;
  if (g == "laplacian_energy" || g == "laplacian_energy_example")
    return ctx.laplacian_energy;
  if (g == "spectral_radius")
    return spectral_radius(ctx.adjacency);
  if (g == "laplacian_spectral_radius")
    return spectral_radius(ctx.laplacian);
  if (g == "eccentricity_spectrum")
    return ctx.eccentricity;
  throw std::logic_error("no oracle mapping for claim " + claim.id);
}

struct Verdict {
  ClaimStatus status;
  std::string detail;
};

Verdict compare_scalar(const Rational &claimed, const ComputedValue &computed) {
  const std::string c = to_string(claimed);
  if (std::holds_alternative<std::monostate>(computed))
    return {ClaimStatus::Mismatch, "computed value is absent (infinite or undefined)"};
  if (const auto *x = std::get_if<std::int64_t>(&computed)) {
    const bool eq = claimed.denominator() == 1 && claimed.numerator() == *x;
    return {eq ? ClaimStatus::Match : ClaimStatus::Mismatch, "exact comparison"};
  }
  if (const auto *b = std::get_if<BoundedValue>(&computed)) {
    if (b->exact()) {
      const bool eq = claimed.denominator() == 1 && claimed.numerator() == b->lower;
      return {eq ? ClaimStatus::Match : ClaimStatus::Mismatch, "exact search result"};
    }
    const std::string range =
        "[" + std::to_string(b->lower) + ", " + std::to_string(b->upper) + "]";
    const double v = as_double(claimed);
    if (v >= double(b->lower) && v <= double(b->upper))
      return {ClaimStatus::NotComparable, "computed interval " + range + " contains " + c};
    return {ClaimStatus::Mismatch, "computed interval " + range + " excludes " + c};
  }
  if (const auto *d = std::get_if<double>(&computed)) {
    return {close(as_double(claimed), *d) ? ClaimStatus::Match : ClaimStatus::Mismatch,
            "relative tolerance 1e-6"};
  }
  return {ClaimStatus::NotComparable, "claimed scalar against a spectrum"};
}

Verdict compare_spectrum(const ClaimedSpectrum &claimed, const Spectrum &computed,
                         std::int64_t n) {
  std::ostringstream detail;
  const std::int64_t total = claimed.multiplicity_sum();
  detail << "claimed multiplicities sum to " << total << " (vertex count " << n << ")";
  for (const auto &part : claimed.parts)
    if (part.multiplicity < 0) {
      detail << "; multiplicity of " << part.value << " evaluates to " << part.multiplicity;
      return {ClaimStatus::NotComparable, detail.str()};
    }
  std::vector<SpectrumCluster> clusters;
  for (const auto &part : claimed.parts)
    clusters.push_back({part.value, part.multiplicity});
  if (claimed.quotient.size() != 0) {
    Spectrum q;
    try {
      q = quotient_eigenvalues(claimed.quotient);
    } catch (const std::exception &e) {
      detail << "; claimed quotient eigenvalues unavailable: " << e.what();
      return {ClaimStatus::NotComparable, detail.str()};
    }
    for (double x : q.values)
      clusters.push_back({x, 1});
    if (q.max_imaginary > 1e-9)
      detail << "; claimed quotient has complex eigenvalues (max |Im| " << q.max_imaginary
             << "), real parts used";
  }
  const Spectrum stated = Spectrum::from_clusters(clusters, computed.tolerance);
  detail << "; tolerance " << computed.tolerance;
  const bool ok = spectrum_matches(stated, computed, computed.tolerance);
  return {ok ? ClaimStatus::Match : ClaimStatus::Mismatch, detail.str()};
}

} // namespace

const std::vector<Claim> &claim_registry() {
  static const std::vector<Claim> registry = make_registry();
  return registry;
}

const std::vector<std::string> &claim_groups() {
  static const std::vector<std::string> groups = {
      "vertex_count",       "edge_count",         "diameter",
      "clique_number",      "chromatic_number",   "girth",
      "vertex_connectivity", "edge_connectivity", "class_degrees",
      "wiener",             "randic",             "zagreb_m1",
      "zagreb_m2",          "adjacency_rank",     "adjacency_nullity",
      "adjacency_spectrum", "laplacian_spectrum", "laplacian_energy",
      "spectral_radius",    "laplacian_spectral_radius", "eccentricity_values",
      "eccentricity_spectrum", "adjacency_nullity_example", "laplacian_energy_example"};
  return groups;
}

const Claim &find_claim(std::string_view id) {
  for (const auto &c : claim_registry())
    if (c.id == id)
      return c;
  throw std::out_of_range("unknown claim id: " + std::string(id));
}

ClaimedValue claimed_value(std::string_view id, OddPrime p) {
  return find_claim(id).evaluate(p);
}

std::size_t ClaimReport::count(ClaimStatus s) const {
  std::size_t k = 0;
  for (const auto &r : results)
    k += r.status == s ? 1 : 0;
  return k;
}

const ClaimResult &ClaimReport::result(std::string_view id) const {
  for (const auto &r : results)
    if (r.id == id)
      return r;
  throw std::out_of_range("no result for claim " + std::string(id));
}

ClaimResult verify_claim(const Claim &claim, const OracleContext &ctx) {
  const OddPrime p = ctx.p();
  ClaimResult out{claim.id, claim.kind, claim.evaluate(p), computed_for(claim, ctx),
                  ClaimStatus::NotComparable, ""};
  Verdict v;
  if (claim.only_at_p && *claim.only_at_p != p.value()) {
    v = {ClaimStatus::NotComparable,
         "stated only for p = " + std::to_string(*claim.only_at_p)};
  } else if (const auto *r = std::get_if<Rational>(&out.claimed)) {
    v = compare_scalar(*r, out.computed);
  } else if (const auto *d = std::get_if<double>(&out.claimed)) {
    if (const auto *x = std::get_if<double>(&out.computed))
      v = {close(*d, *x) ? ClaimStatus::Match : ClaimStatus::Mismatch,
           "relative tolerance 1e-6"};
    else
      v = {ClaimStatus::NotComparable, "computed value is not real"};
  } else {
    const auto &s = std::get<ClaimedSpectrum>(out.claimed);
    if (const auto *spec = std::get_if<Spectrum>(&out.computed))
      v = compare_spectrum(s, *spec, ctx.n());
    else
      v = {ClaimStatus::NotComparable, "computed value is not a spectrum"};
  }
  out.status = v.status;
  out.detail = v.detail;
  if (claim.note) {
    const std::string extra = claim.note(p);
    if (!extra.empty())
      out.detail += (out.detail.empty() ? "" : "; ") + extra;
  }
  return out;
}

ClaimResult verify_claim(std::string_view id, const OracleContext &ctx) {
  return verify_claim(find_claim(id), ctx);
}

ClaimReport verify_all(const OracleContext &ctx) {
  ClaimReport report;
  report.p = ctx.p().value();
  for (const auto &claim : claim_registry())
    report.results.push_back(verify_claim(claim, ctx));
  return report;
}

ClaimReport verify_all(OddPrime p, const OracleOptions &options) {
  return verify_all(build_oracle(p, options));
}

} // namespace zdg
