#include <doctest.h>

#include <cmath>
#include <limits>

#include "vreg/error.hpp"
#include "vreg/rational.hpp"

using vreg::Rational;
using vreg::u128;

TEST_CASE("rational reduces and compares") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(7, 6) > Rational::integer(1));
  CHECK(Rational(14, 17) < Rational::integer(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(6, 5).str() == "6/5");
  CHECK(Rational(10, 5).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), vreg::InvalidInput);
}

TEST_CASE("rational multiplication cross-reduces") {
  CHECK(Rational(3, 2) * Rational(4, 3) == Rational::integer(2));
  const u128 big = static_cast<u128>(1) << 100;
  // Needs cross-reduction to fit.
  CHECK(Rational(big, 3) * Rational(3, big) == Rational::integer(1));
  CHECK_FALSE(Rational(big, 1).try_mul(Rational(big, 1)).has_value());
  CHECK_THROWS_AS(Rational(big, 1) * Rational(big, 1), vreg::ArithmeticOverflow);
}

TEST_CASE("comparison is exact for huge operands") {
  const u128 max = ~static_cast<u128>(0);
  CHECK(Rational(max - 1, max) < Rational(max, max - 2));
  CHECK_FALSE(Rational(max, max - 1) > Rational(max - 1, max - 2));
  CHECK(Rational(max - 2, max - 1) < Rational(max - 1, max));
}

TEST_CASE("rounds_to matches correctly rounded division") {
  CHECK(Rational(6, 5).rounds_to(1.2));
  CHECK(Rational(3, 2).rounds_to(1.5));
  CHECK(Rational(11, 10).rounds_to(1.1));
  CHECK(Rational::integer(10).rounds_to(10.0));
  CHECK_FALSE(Rational(6, 5).rounds_to(std::nextafter(1.2, 2.0)));
  CHECK_FALSE(Rational(6, 5).rounds_to(std::nextafter(1.2, 0.0)));
  CHECK_FALSE(Rational(12, 11).rounds_to(1.1));
  // Every small fraction rounds to its double quotient.
  for (std::uint64_t den = 1; den <= 200; ++den) {
    for (std::uint64_t num = 1; num <= 400; ++num) {
      const double d = static_cast<double>(num) / static_cast<double>(den);
      REQUIRE_MESSAGE(Rational(num, den).rounds_to(d), num << "/" << den);
      REQUIRE_FALSE(Rational(num, den).rounds_to(std::nextafter(d, 1e300)));
    }
  }
  CHECK(Rational::integer(1ull << 60).rounds_to(std::ldexp(1.0, 60)));
  CHECK_FALSE(Rational(1, 1).rounds_to(0.0));
}
