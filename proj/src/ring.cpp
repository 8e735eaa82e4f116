#include "zdg/ring.hpp"

namespace zdg {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::int64_t k = 3; k * k <= n; k += 2)
    if (n % k == 0)
      return false;
  return true;
}

OddPrime::OddPrime(std::int64_t p) : p_(p) {
  if (p == 2)
    throw std::invalid_argument("p = 2 is not an odd prime");
  if (!is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > 0xFFFF)
    throw std::invalid_argument("p too large for 32-bit coefficient products");
}

namespace {

std::uint32_t reduce(std::int64_t x, std::int64_t p) {
  auto r = x % p;
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

} // namespace

RingElement RingElement::make(std::int64_t a, std::int64_t b, std::int64_t c,
                              std::int64_t d, OddPrime p) {
  return {reduce(a, p), reduce(b, p), reduce(c, p), reduce(d, p)};
}

RingElement add(const RingElement &x, const RingElement &y, OddPrime p) {
  return RingElement::make(std::int64_t{x.a} + y.a, std::int64_t{x.b} + y.b,
                           std::int64_t{x.c} + y.c, std::int64_t{x.d} + y.d, p);
}

RingElement mul(const RingElement &x, const RingElement &y, OddPrime p) {
  const std::int64_t xa = x.a, xb = x.b, xc = x.c, xd = x.d;
  const std::int64_t ya = y.a, yb = y.b, yc = y.c, yd = y.d;
  // u^2 = v^2 = 0 kills every monomial except these.
  return RingElement::make(xa * ya, xa * yb + xb * ya, xa * yc + xc * ya,
                           xa * yd + xd * ya + xb * yc + xc * yb, p);
}

bool is_unit(const RingElement &x) noexcept { return x.a != 0; }

bool annihilates(const RingElement &x, const RingElement &y, OddPrime p) {
  if (x.a == 0 && y.a == 0) {
    const std::int64_t s = std::int64_t{x.b} * y.c + std::int64_t{x.c} * y.b;
    return s % p == 0;
  }
  return mul(x, y, p).is_zero();
}

std::string to_string(const RingElement &x) {
  std::string out;
  auto term = [&](std::uint32_t coef, std::string_view unit) {
    if (coef == 0)
      return;
    if (!out.empty())
      out += " + ";
    if (unit.empty()) {
      out += std::to_string(coef);
      return;
    }
    if (coef != 1)
      out += std::to_string(coef);
    out += unit;
  };
  term(x.a, "");
  term(x.b, "u");
  term(x.c, "v");
  term(x.d, "uv");
  return out.empty() ? "0" : out;
}

std::vector<RingElement> enumerate_zero_divisors(OddPrime p) {
  const auto q = static_cast<std::uint32_t>(p.value());
  std::vector<RingElement> out;
  out.reserve(static_cast<std::size_t>(q) * q * q - 1);
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t c = 0; c < q; ++c)
      for (std::uint32_t d = 0; d < q; ++d)
        if (b != 0 || c != 0 || d != 0)
          out.push_back({0, b, c, d});
  return out;
}

std::string_view class_name(ZdClass t) noexcept {
  switch (t) {
  case ZdClass::U:
    return "A_u";
  case ZdClass::V:
    return "A_v";
  case ZdClass::UV:
    return "A_uv";
  case ZdClass::UPlusV:
    return "A_u+v";
  case ZdClass::UPlusUV:
    return "A_u+uv";
  case ZdClass::VPlusUV:
    return "A_v+uv";
  case ZdClass::UPlusVPlusUV:
    return "A_u+v+uv";
  }
  return "?";
}

ZdClass classify(const RingElement &x) {
  if (x.is_zero())
    throw std::invalid_argument("classify: zero is not a vertex");
  if (is_unit(x))
    throw std::invalid_argument("classify: " + to_string(x) + " is a unit");
  const unsigned mask = (x.b != 0 ? 4u : 0u) | (x.c != 0 ? 2u : 0u) |
                        (x.d != 0 ? 1u : 0u);
  switch (mask) {
  case 4:
    return ZdClass::U;
  case 2:
    return ZdClass::V;
  case 1:
    return ZdClass::UV;
  case 6:
    return ZdClass::UPlusV;
  case 5:
    return ZdClass::UPlusUV;
  case 3:
    return ZdClass::VPlusUV;
  default:
    return ZdClass::UPlusVPlusUV;
  }
}

std::int64_t class_size(ZdClass t, OddPrime p) noexcept {
  const std::int64_t q = p.value() - 1;
  switch (t) {
  case ZdClass::U:
  case ZdClass::V:
  case ZdClass::UV:
    return q;
  case ZdClass::UPlusV:
  case ZdClass::UPlusUV:
  case ZdClass::VPlusUV:
    return q * q;
  case ZdClass::UPlusVPlusUV:
    return q * q * q;
  }
  return 0;
}

} // namespace zdg
