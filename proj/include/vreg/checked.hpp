#pragma once

#include <cstdint>
#include <string>

#include "vreg/error.hpp"

namespace vreg {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ArithmeticOverflow("64-bit multiplication overflow: " +
                             std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ArithmeticOverflow("64-bit addition overflow: " + std::to_string(a) +
                             " + " + std::to_string(b));
  }
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline bool mul_overflows(u128 a, u128 b, u128* out) {
  return __builtin_mul_overflow(a, b, out);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp,
                            std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Decimal rendering of a 128-bit value.
std::string format_u128(u128 value);
std::string format_i128(i128 value);

}  // namespace vreg
