#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "vreg/checked.hpp"

namespace vreg {

/// Non-negative rational with 128-bit numerator and denominator, always
/// kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(u128 num, u128 den);  // throws InvalidInput on den == 0

  static Rational integer(u128 value) { return Rational(value, 1); }

  u128 num() const noexcept { return num_; }
  u128 den() const noexcept { return den_; }

  /// Exact product, or nullopt if the reduced result exceeds 128 bits.
  std::optional<Rational> try_mul(const Rational& other) const;
  /// Throws ArithmeticOverflow instead of returning nullopt.
  Rational operator*(const Rational& other) const;

  friend bool operator==(const Rational&, const Rational&) = default;
  /// Exact three-way comparison (uses 256-bit cross products).
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  long double to_long_double() const;

  /// True iff the exact value rounds to `d` under round-to-nearest, i.e.
  /// |value - d| <= ulp(d)/2. Returns false when the check cannot be done
  /// in 128 bits.
  bool rounds_to(double d) const;

  std::string str() const;  // "num/den", or just "num" when den == 1

 private:
  u128 num_ = 0;
  u128 den_ = 1;
};

u128 gcd128(u128 a, u128 b);

}  // namespace vreg
