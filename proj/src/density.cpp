#include "vreg/density.hpp"

#include <cmath>
#include <string>

#include "vreg/arith.hpp"
#include "vreg/error.hpp"
#include "vreg/sieve.hpp"

namespace vreg {

namespace {

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  double value() const { return sum + comp; }

  CompensatedSum plus(double x) const {
    CompensatedSum r;
    r.sum = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      r.comp = comp + ((sum - r.sum) + x);
    } else {
      r.comp = comp + ((x - r.sum) + sum);
    }
    return r;
  }
};

// Only candidates this close to log(delta) in float are checked rationally.
constexpr double kTieWindow = 1e-12;

Rational factor(DensityKind kind, std::uint64_t p) {
  return kind == DensityKind::kPsiOverV ? Rational(static_cast<u128>(p) + 1, p)
                                        : Rational(p, p - 1);
}

}  // namespace

std::string_view to_string(DensityKind kind) {
  return kind == DensityKind::kPsiOverV ? "psi_over_v" : "v_over_phi";
}

DensityKind parse_density_kind(std::string_view name) {
  if (name == "psi_over_v") return DensityKind::kPsiOverV;
  if (name == "v_over_phi") return DensityKind::kVOverPhi;
  throw InvalidInput("unknown density kind '" + std::string(name) + "'");
}

double term(DensityKind kind, std::uint64_t p) {
  return kind == DensityKind::kPsiOverV ? 1.0 / static_cast<double>(p)
                                        : 1.0 / static_cast<double>(p - 1);
}

RatioValue evaluate_ratio(DensityKind kind,
                          std::span<const std::uint64_t> primes) {
  RatioValue out;
  out.exact = Rational::integer(1);
  CompensatedSum log_sum;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
    if (i > 0 && primes[i - 1] >= p) {
      throw InvalidInput("primes must be strictly increasing");
    }
    log_sum = log_sum.plus(std::log1p(term(kind, p)));
    if (out.exact) out.exact = out.exact->try_mul(factor(kind, p));
  }
  out.log_value = log_sum.value();
  out.value = std::exp(out.log_value);
  return out;
}

DensityApproximation greedy_subseries(DensityKind kind, double delta,
                                      std::uint64_t prime_limit) {
  if (prime_limit < 2) throw InvalidInput("prime_limit must be >= 2");
  const SpfTable table(prime_limit);
  return greedy_subseries(kind, delta, prime_limit, table.primes());
}

DensityApproximation greedy_subseries(DensityKind kind, double delta,
                                      std::uint64_t prime_limit,
                                      std::span<const std::uint32_t> primes) {
  if (!(delta > 1.0) || !std::isfinite(delta)) {
    throw InvalidInput("delta must be a finite number > 1");
  }
  if (prime_limit < 2) throw InvalidInput("prime_limit must be >= 2");

  DensityApproximation out;
  out.kind = kind;
  out.delta = delta;
  out.prime_limit = prime_limit;
  const double target = std::log(delta);

  CompensatedSum acc;
  std::optional<Rational> exact = Rational::integer(1);
  std::uint64_t last_skipped = 0;  // largest prime skipped since last selection

  for (std::uint32_t p32 : primes) {
    const std::uint64_t p = p32;
    if (p > prime_limit) break;
    const CompensatedSum candidate = acc.plus(std::log1p(term(kind, p)));
    const double gap = target - candidate.value();

    if (exact && std::fabs(gap) <= kTieWindow) {
      const auto next = exact->try_mul(factor(kind, p));
      if (next && next->rounds_to(delta)) {
        out.selected_primes.push_back(p);
        out.exact_hit = true;
        exact = next;
        out.trajectory.push_back(target);
        break;
      }
    }
    if (gap >= 0.0) {
      acc = candidate;
      out.selected_primes.push_back(p);
      out.trajectory.push_back(acc.value());
      if (exact) exact = exact->try_mul(factor(kind, p));
      last_skipped = 0;
    } else {
      last_skipped = p;
    }
  }

  out.exact_ratio = exact;
  if (out.exact_hit) {
    out.log_product = target;
    out.achieved = delta;
    out.error = 0.0;
    out.gap_bound = 0.0;
    return out;
  }
  out.log_product = acc.value();
  out.achieved = std::exp(out.log_product);
  out.error = std::fabs(out.achieved - delta);
  if (last_skipped == 0) {
    out.limit_saturated = true;
    out.gap_bound = target - out.log_product;
  } else {
    out.gap_bound = std::log1p(term(kind, last_skipped));
  }
  return out;
}

}  // namespace vreg
