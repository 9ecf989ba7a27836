#include "vreg/rational.hpp"

#include <bit>
#include <cmath>

#include "vreg/error.hpp"

namespace vreg {

namespace {

// Minimal unsigned 256-bit value for exact cross-multiplication.
struct U256 {
  u128 hi = 0;
  u128 lo = 0;

  friend std::strong_ordering operator<=>(const U256& a, const U256& b) {
    if (a.hi != b.hi) return a.hi < b.hi ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    if (a.lo != b.lo) return a.lo < b.lo ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

U256 mul_wide(u128 a, u128 b) {
  const u128 mask = ~static_cast<std::uint64_t>(0);
  const u128 a0 = a & mask, a1 = a >> 64;
  const u128 b0 = b & mask, b1 = b >> 64;
  const u128 p00 = a0 * b0;
  const u128 p01 = a0 * b1;
  const u128 p10 = a1 * b0;
  const u128 p11 = a1 * b1;
  const u128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
  U256 r;
  r.lo = (p00 & mask) | (mid << 64);
  r.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return r;
}

int bit_width128(u128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 64 + std::bit_width(hi);
  return std::bit_width(static_cast<std::uint64_t>(v));
}

// v << shift, or nullopt when the result needs more than 256 bits.
std::optional<U256> shl_wide(u128 v, int shift) {
  if (v == 0) return U256{};
  if (bit_width128(v) + shift > 256) return std::nullopt;
  U256 r;
  if (shift >= 128) {
    r.hi = v << (shift - 128);
  } else if (shift == 0) {
    r.lo = v;
  } else {
    r.lo = v << shift;
    r.hi = v >> (128 - shift);
  }
  return r;
}

}  // namespace

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational::Rational(u128 num, u128 den) {
  if (den == 0) throw InvalidInput("rational: zero denominator");
  const u128 g = gcd128(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::optional<Rational> Rational::try_mul(const Rational& other) const {
  // Cross-reduce first so the products stay as small as possible.
  const u128 g1 = gcd128(num_, other.den_);
  const u128 g2 = gcd128(other.num_, den_);
  u128 num;
  u128 den;
  if (mul_overflows(num_ / (g1 ? g1 : 1), other.num_ / (g2 ? g2 : 1), &num) ||
      mul_overflows(den_ / (g2 ? g2 : 1), other.den_ / (g1 ? g1 : 1), &den)) {
    return std::nullopt;
  }
  Rational r;
  r.num_ = num;
  r.den_ = den;
  if (num == 0) r.den_ = 1;
  return r;
}

Rational Rational::operator*(const Rational& other) const {
  auto r = try_mul(other);
  if (!r) throw ArithmeticOverflow("rational product exceeds 128 bits");
  return *r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return mul_wide(a.num_, b.den_) <=> mul_wide(b.num_, a.den_);
}

long double Rational::to_long_double() const {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

bool Rational::rounds_to(double d) const {
  if (!(d > 0) || !std::isfinite(d)) return false;
  int exp2 = 0;
  const double frac = std::frexp(d, &exp2);  // d = frac * 2^exp2
  if (exp2 < -1021) return false;           // subnormal range not supported
  const auto mantissa = static_cast<u128>(std::ldexp(frac, 53));
  const int e = exp2 - 53;  // d = mantissa * 2^e, ulp(d) = 2^e
  const bool power_of_two = mantissa == (static_cast<u128>(1) << 52);

  // Compare value * 2^(k) against (scaled bound) * den for both sides of the
  // rounding interval [d - ulp_below/2, d + ulp/2]. Everything is scaled by
  // 2^(2 - e) when e < 2 so that all bounds are integers.
  const int scale = e < 2 ? 2 - e : 0;
  const int bound_shift = e < 2 ? 0 : e - 2;
  auto lhs = shl_wide(num_, scale);
  if (!lhs) return false;
  // upper = (4M + 2) * 2^(e-2), lower = (4M - 2) or (4M - 1) * 2^(e-2)
  const u128 upper = 4 * mantissa + 2;
  const u128 lower = 4 * mantissa - (power_of_two ? 1 : 2);
  auto scaled = [&](u128 bound) -> std::optional<U256> {
    const U256 prod = mul_wide(bound, den_);
    if (bound_shift == 0) return prod;
    if (prod.hi != 0) return std::nullopt;
    return shl_wide(prod.lo, bound_shift);
  };
  const auto up = scaled(upper);
  const auto lo = scaled(lower);
  if (!up || !lo) return false;
  return *lhs <= *up && *lhs >= *lo;
}

std::string Rational::str() const {
  if (den_ == 1) return format_u128(num_);
  return format_u128(num_) + "/" + format_u128(den_);
}

}  // namespace vreg
