#pragma once

#include <cstdint>
#include <vector>

namespace vreg {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n with its canonical decomposition: primes strictly increasing, product of
/// the prime powers equal to n, empty iff n == 1.
class Factorization {
 public:
  Factorization() = default;

  /// Validates every invariant; throws InvalidInput or ArithmeticOverflow.
  static Factorization from_factors(std::vector<PrimePower> factors);

  std::uint64_t n() const noexcept { return n_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  bool squarefree() const noexcept;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  friend Factorization factorize(std::uint64_t n);

  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

struct ArithProfile {
  std::uint64_t n = 1;
  std::uint64_t v = 1;
  std::uint64_t phi = 1;
  std::uint64_t psi = 1;
  std::uint64_t sigma = 1;
  bool squarefree = true;

  friend bool operator==(const ArithProfile&, const ArithProfile&) = default;
};

inline constexpr std::uint64_t kDefaultRegSetCap = 1'000'000;

/// gcd(0, 0) == 0.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Throws InvalidInput for n == 0.
Factorization factorize(std::uint64_t n);

/// Whether a^2 x = a (mod n) has a solution x. Requires 1 <= a <= n; a == n
/// stands for the zero residue.
bool is_regular(std::uint64_t a, std::uint64_t n);

/// All regular residues in [1, n], ascending.
std::vector<std::uint64_t> reg_set(std::uint64_t n,
                                   std::uint64_t cap = kDefaultRegSetCap);

// Multiplicative evaluations. Each throws ArithmeticOverflow rather than wrap.
std::uint64_t v_of(const Factorization& f);
std::uint64_t phi_of(const Factorization& f);
std::uint64_t psi_of(const Factorization& f);
std::uint64_t sigma_of(const Factorization& f);

/// V(p^e) = p^e - p^(e-1) + 1.
std::uint64_t v_of_prime_power(std::uint64_t p, unsigned e);

ArithProfile profile(std::uint64_t n);
ArithProfile profile(const Factorization& f);

}  // namespace vreg
