#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vreg {

inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;

enum class WitnessKind {
  kProp1Ascending,
  kProp1Descending,
  kProp2Liminf,
  kProp2Limsup,
  kProp3Up,
  kProp3Down,
};

std::string_view to_string(WitnessKind kind);
/// Throws InvalidInput for an unknown name.
WitnessKind parse_witness_kind(std::string_view name);

/// One verified side condition: `lhs relation rhs`, values rendered exactly
/// (integers in decimal, rationals as num/den).
struct Check {
  std::string description;
  std::string lhs;
  std::string relation;
  std::string rhs;
  bool pass = false;
};

struct WitnessReport {
  WitnessKind kind{};
  std::uint64_t witness_prime = 0;
  std::uint64_t modulus = 0;
  std::uint64_t residue = 0;
  std::uint64_t steps_tried = 0;
  std::vector<Check> checks;
  /// Kind-specific values (A, B, k, ...) in insertion order.
  std::vector<std::pair<std::string, std::string>> auxiliary;

  bool all_checks_pass() const noexcept;
  /// Value of an auxiliary field; throws std::out_of_range if absent.
  const std::string& aux(std::string_view key) const;
};

struct ProgressionHit {
  std::uint64_t prime = 0;
  std::uint64_t steps_tried = 0;
};

/// Least prime in residue, residue + modulus, residue + 2 modulus, ...
/// (residue reduced mod modulus first; terms below 2 are skipped without
/// counting as steps). Throws InvalidInput unless modulus >= 2 and
/// gcd(residue, modulus) == 1; NotFound after max_steps terms;
/// ArithmeticOverflow if a term would leave the 64-bit range.
ProgressionHit dirichlet_prime(std::uint64_t residue, std::uint64_t modulus,
                               std::uint64_t max_steps = kDefaultMaxSteps);

/// Residue class of a signed value, e.g. -1 mod 12 == 11.
std::uint64_t normalize_residue(std::int64_t residue, std::uint64_t modulus);

/// Prime p = 1 + a * (product of primes), so p - 1 is in A.
WitnessReport prop1_ascending_witness(std::span<const std::uint64_t> primes,
                                      std::uint64_t max_steps = kDefaultMaxSteps);

/// Prime q = -1 + b * p1^2 p2 ... pr, so q is in B.
WitnessReport prop1_descending_witness(
    std::span<const std::uint64_t> primes,
    std::uint64_t max_steps = kDefaultMaxSteps);

/// A = product of primes <= x; least prime q = A + 1 (mod A^2).
WitnessReport linnik_witness_liminf(std::uint64_t x,
                                    std::uint64_t max_steps = kDefaultMaxSteps);

/// A = p_t * product of primes <= x (p_t the largest); least prime
/// q = A - 1 (mod A^2).
WitnessReport linnik_witness_limsup(std::uint64_t x,
                                    std::uint64_t max_steps = kDefaultMaxSteps);

enum class GapDirection { kUp, kDown };

/// Up: least prime p >= p_min with p = 1 (mod 4); V(p) - V(p-1) >= (p+3)/4.
/// Down: least prime p >= p_min with p = 3 (mod 4); V(p) - V(p+1) >= (p-3)/4.
WitnessReport prop3_gap_witness(GapDirection direction, std::uint64_t p_min,
                                std::uint64_t max_steps = kDefaultMaxSteps);

/// Product of all primes <= x. Throws ArithmeticOverflow past 64 bits.
std::uint64_t primorial(std::uint64_t x);

}  // namespace vreg
