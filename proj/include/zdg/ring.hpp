#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zdg {

/// An odd prime modulus, validated by trial division on construction.
class OddPrime {
public:
  explicit OddPrime(std::int64_t p);

  std::int64_t value() const noexcept { return p_; }
  operator std::int64_t() const noexcept { return p_; }

  friend bool operator==(OddPrime, OddPrime) = default;

private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n) noexcept;

/// a + b u + c v + d uv with every coefficient a canonical residue in [0, p).
struct RingElement {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::uint32_t d = 0;

  /// Reduces arbitrary signed coefficients into canonical form.
  static RingElement make(std::int64_t a, std::int64_t b, std::int64_t c,
                          std::int64_t d, OddPrime p);

  bool is_zero() const noexcept { return a == 0 && b == 0 && c == 0 && d == 0; }

  friend bool operator==(const RingElement &, const RingElement &) = default;
  friend auto operator<=>(const RingElement &, const RingElement &) = default;
};

RingElement add(const RingElement &x, const RingElement &y, OddPrime p);
RingElement mul(const RingElement &x, const RingElement &y, OddPrime p);

bool is_unit(const RingElement &x) noexcept;
bool annihilates(const RingElement &x, const RingElement &y, OddPrime p);

/// Human-readable form such as "2u + v + uv"; zero prints as "0".
std::string to_string(const RingElement &x);

/// All a = 0, (b,c,d) != 0 elements in ascending lexicographic (b,c,d) order.
std::vector<RingElement> enumerate_zero_divisors(OddPrime p);

/// Support classes of the nonzero zero-divisors, in the fixed block order.
enum class ZdClass : std::uint8_t {
  U = 0,
  V,
  UV,
  UPlusV,
  UPlusUV,
  VPlusUV,
  UPlusVPlusUV,
};

inline constexpr std::size_t kClassCount = 7;

inline constexpr std::array<ZdClass, kClassCount> kAllClasses = {
    ZdClass::U,       ZdClass::V,       ZdClass::UV,          ZdClass::UPlusV,
    ZdClass::UPlusUV, ZdClass::VPlusUV, ZdClass::UPlusVPlusUV};

/// Short tag: "A_u", "A_v", "A_uv", "A_u+v", "A_u+uv", "A_v+uv", "A_u+v+uv".
std::string_view class_name(ZdClass t) noexcept;

/// Throws std::invalid_argument for zero and for units.
ZdClass classify(const RingElement &x);

std::int64_t class_size(ZdClass t, OddPrime p) noexcept;

} // namespace zdg
