#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zdg/oracle.hpp"

namespace zdg {

using Rational = boost::rational<std::int64_t>;

enum class ClaimKind { Integer, Rational, Real, Spectrum, PerClass };

std::string_view kind_name(ClaimKind k) noexcept;

/// A closed-form spectrum: explicit (value, multiplicity) parts plus every
/// eigenvalue (multiplicity one) of a stated quotient matrix. Multiplicities
/// are kept signed because a formula may evaluate negative.
struct ClaimedSpectrum {
  struct Part {
    double value;
    std::int64_t multiplicity;
  };
  std::vector<Part> parts;
  DenseMatrix<double> quotient; ///< empty when the claim has no quotient part

  std::int64_t multiplicity_sum() const;
};

using ClaimedValue = std::variant<Rational, double, ClaimedSpectrum>;

struct Claim {
  std::string id;
  std::string group;  ///< per-class claims share a group; otherwise group == id
  ClaimKind kind;
  std::string anchor; ///< location label and the stated formula, verbatim
  std::optional<std::int64_t> only_at_p; ///< worked-example claims
  std::optional<ZdClass> zd_class;       ///< set for per-class claims
  std::function<ClaimedValue(OddPrime)> evaluate;
  /// Cross-reference to other stated values that disagree with this one.
  std::function<std::string(OddPrime)> note;
};

/// Every registered claim, in report order.
const std::vector<Claim> &claim_registry();

/// Groups that a complete registry must contain, in report order.
const std::vector<std::string> &claim_groups();

/// Throws std::out_of_range for an unknown id.
const Claim &find_claim(std::string_view id);
ClaimedValue claimed_value(std::string_view id, OddPrime p);

enum class ClaimStatus { Match, Mismatch, NotComparable };

std::string_view status_name(ClaimStatus s) noexcept;

/// Oracle side of a comparison; monostate means "absent" (infinite girth,
/// undefined quotient, ...).
using ComputedValue = std::variant<std::monostate, std::int64_t, BoundedValue, double, Spectrum>;

struct ClaimResult {
  std::string id;
  ClaimKind kind;
  ClaimedValue claimed;
  ComputedValue computed;
  ClaimStatus status;
  std::string detail;
};

struct ClaimReport {
  std::int64_t p = 0;
  std::vector<ClaimResult> results;

  std::size_t count(ClaimStatus s) const;
  const ClaimResult &result(std::string_view id) const;
};

/// Relative tolerance for real and rational comparisons.
inline constexpr double kClaimRelTolerance = 1e-6;

ClaimResult verify_claim(const Claim &claim, const OracleContext &ctx);
ClaimResult verify_claim(std::string_view id, const OracleContext &ctx);

ClaimReport verify_all(const OracleContext &ctx);
ClaimReport verify_all(OddPrime p, const OracleOptions &options = {});

} // namespace zdg
