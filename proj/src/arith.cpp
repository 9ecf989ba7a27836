#include "vreg/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "vreg/checked.hpp"
#include "vreg/error.hpp"

namespace vreg {

namespace {

constexpr std::uint64_t kTrialBound = 1000;

constexpr auto kSmallPrimes = [] {
  std::array<std::uint32_t, 168> primes{};
  std::size_t count = 0;
  for (std::uint32_t i = 2; i < kTrialBound; ++i) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= i; ++d) {
      if (i % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes[count++] = i;
  }
  return primes;
}();

bool miller_rabin_round(std::uint64_t n, std::uint64_t d, unsigned s,
                        std::uint64_t base) {
  std::uint64_t x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle variant of Pollard rho. n must be composite and odd.
std::uint64_t pollard_brent(std::uint64_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1, n - 1);
  while (true) {
    const std::uint64_t c = dist(rng);
    auto step = [&](std::uint64_t v) {
      const std::uint64_t sq = mulmod(v, v, n);
      // sq + c may exceed 2^64 when n is close to it.
      return sq >= n - c ? sq - (n - c) : sq + c;
    };
    std::uint64_t y = dist(rng);
    std::uint64_t g = 1;
    std::uint64_t q = 1;
    std::uint64_t x = y;
    std::uint64_t ys = y;
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(std::uint64_t n, std::vector<std::uint64_t>& out,
                std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n, rng);
  split_into(d, out, rng);
  split_into(n / d, out, rng);
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  return std::gcd(a, b);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < kTrialBound * kTrialBound) return true;

  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // First twelve primes are a deterministic witness set below 3.3 * 10^24.
  for (std::uint64_t base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw InvalidInput("factorize: n must be >= 1");
  Factorization f;
  f.n_ = n;
  std::uint64_t rest = n;
  for (std::uint32_t p : kSmallPrimes) {
    if (static_cast<std::uint64_t>(p) * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors_.push_back({p, e});
  }
  if (rest == 1) return f;

  std::vector<std::uint64_t> large;
  if (rest < kTrialBound * kTrialBound || is_prime(rest)) {
    large.push_back(rest);
  } else {
    std::mt19937_64 rng(n);
    split_into(rest, large, rng);
  }
  std::sort(large.begin(), large.end());
  for (std::uint64_t p : large) {
    if (!f.factors_.empty() && f.factors_.back().prime == p) {
      ++f.factors_.back().exponent;
    } else {
      f.factors_.push_back({p, 1});
    }
  }
  return f;
}

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  Factorization f;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [p, e] = factors[i];
    if (e == 0) throw InvalidInput("factorization: exponent must be positive");
    if (!is_prime(p)) {
      throw InvalidInput("factorization: " + std::to_string(p) +
                         " is not prime");
    }
    if (i > 0 && factors[i - 1].prime >= p) {
      throw InvalidInput("factorization: primes must be strictly increasing");
    }
    n = checked_mul(n, checked_pow(p, e));
  }
  f.n_ = n;
  f.factors_ = std::move(factors);
  return f;
}

bool Factorization::squarefree() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool is_regular(std::uint64_t a, std::uint64_t n) {
  if (n == 0) throw InvalidInput("is_regular: n must be >= 1");
  if (a < 1 || a > n) {
    throw InvalidInput("is_regular: a must lie in [1, n]");
  }
  // a^2 x = a (mod n) is solvable iff gcd(a^2, n) divides a.
  const std::uint64_t g = std::gcd(mulmod(a, a, n), n);
  return a % g == 0;
}

std::vector<std::uint64_t> reg_set(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw InvalidInput("reg_set: n must be >= 1");
  if (n > cap) throw CapExceeded("reg_set: n = " + std::to_string(n) +
                                 " exceeds the enumeration cap", cap);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a <= n; ++a) {
    if (is_regular(a, n)) out.push_back(a);
  }
  return out;
}

std::uint64_t v_of_prime_power(std::uint64_t p, unsigned e) {
  if (e == 0) return 1;
  const std::uint64_t lower = checked_pow(p, e - 1);
  const std::uint64_t full = checked_mul(lower, p);
  // full - lower + 1 <= full, so the sum cannot overflow.
  return full - lower + 1;
}

std::uint64_t v_of(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, e] : f.factors()) {
    r = checked_mul(r, v_of_prime_power(p, e));
  }
  return r;
}

std::uint64_t phi_of(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, e] : f.factors()) {
    r = checked_mul(r, checked_mul(checked_pow(p, e - 1), p - 1));
  }
  return r;
}

std::uint64_t psi_of(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, e] : f.factors()) {
    r = checked_mul(r, checked_mul(checked_pow(p, e - 1), checked_add(p, 1)));
  }
  return r;
}

std::uint64_t sigma_of(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, e] : f.factors()) {
    std::uint64_t sum = 1;
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power = checked_mul(power, p);
      sum = checked_add(sum, power);
    }
    r = checked_mul(r, sum);
  }
  return r;
}

ArithProfile profile(const Factorization& f) {
  return ArithProfile{f.n(),      v_of(f),     phi_of(f),
                      psi_of(f),  sigma_of(f), f.squarefree()};
}

ArithProfile profile(std::uint64_t n) { return profile(factorize(n)); }

std::string format_u128(u128 value) {
  if (value == 0) return "0";
  std::string s;
  while (value != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string format_i128(i128 value) {
  if (value < 0) return "-" + format_u128(static_cast<u128>(-(value + 1)) + 1);
  return format_u128(static_cast<u128>(value));
}

}  // namespace vreg
