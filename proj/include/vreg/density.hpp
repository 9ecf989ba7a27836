#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vreg/rational.hpp"

namespace vreg {

/// psi_over_v: u(p) = 1/p, products of (1 + u) equal psi(m)/V(m).
/// v_over_phi: u(p) = 1/(p - 1), products of (1 + u) equal V(m)/phi(m).
/// Here m is the (squarefree) product of the selected primes.
enum class DensityKind { kPsiOverV, kVOverPhi };

std::string_view to_string(DensityKind kind);
DensityKind parse_density_kind(std::string_view name);

/// The series term u for prime p.
double term(DensityKind kind, std::uint64_t p);

struct RatioValue {
  std::optional<Rational> exact;  // absent when it exceeds 128 bits
  double log_value = 0.0;
  double value = 1.0;
};

/// The ratio attached to m = product of `primes` (strictly increasing primes).
RatioValue evaluate_ratio(DensityKind kind, std::span<const std::uint64_t> primes);

struct DensityApproximation {
  DensityKind kind{};
  double delta = 0.0;
  std::vector<std::uint64_t> selected_primes;
  double log_product = 0.0;
  double achieved = 1.0;
  double error = 0.0;
  double gap_bound = 0.0;
  std::uint64_t prime_limit = 0;
  bool limit_saturated = false;
  /// Set when some prefix product hit delta exactly (certified rationally).
  bool exact_hit = false;
  std::optional<Rational> exact_ratio;
  /// log_product after each selection, in order.
  std::vector<double> trajectory;
};

/// Scans primes <= prime_limit upward and keeps p whenever the running
/// log-product plus log(1 + u(p)) stays <= log(delta). A prime whose inclusion
/// makes the exact product round to delta is always kept and ends the scan.
/// Throws InvalidInput for delta <= 1 (or not finite) or prime_limit < 2.
DensityApproximation greedy_subseries(DensityKind kind, double delta,
                                      std::uint64_t prime_limit);

/// Same, over a caller-supplied ascending prime list (all <= prime_limit).
DensityApproximation greedy_subseries(DensityKind kind, double delta,
                                      std::uint64_t prime_limit,
                                      std::span<const std::uint32_t> primes);

}  // namespace vreg
