#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vreg/arith.hpp"
#include "vreg/density.hpp"
#include "vreg/error.hpp"
#include "vreg/sieve.hpp"

using namespace vreg;

namespace {

using Primes = std::vector<std::uint64_t>;

// Reduced num/den of prod (p+1)/p or prod p/(p-1), by plain 64-bit products.
std::pair<std::uint64_t, std::uint64_t> direct_ratio(DensityKind kind,
                                                     const Primes& primes) {
  std::uint64_t num = 1, den = 1;
  for (auto p : primes) {
    num *= kind == DensityKind::kPsiOverV ? p + 1 : p;
    den *= kind == DensityKind::kPsiOverV ? p : p - 1;
  }
  const auto g = oracle::gcd(num, den);
  return {num / g, den / g};
}

void check_never_overshoots(const DensityApproximation& g) {
  double previous = 0.0;
  for (double lp : g.trajectory) {
    REQUIRE(lp <= std::log(g.delta));
    REQUIRE(lp > previous);
    previous = lp;
  }
  CHECK(g.log_product <= std::log(g.delta));
}

}  // namespace

TEST_CASE("term") {
  CHECK(term(DensityKind::kPsiOverV, 2) == 0.5);
  CHECK(term(DensityKind::kVOverPhi, 2) == 1.0);
  CHECK(term(DensityKind::kVOverPhi, 5) == 0.25);
}

TEST_CASE("greedy exact hits") {
  auto g = greedy_subseries(DensityKind::kPsiOverV, 2.0, 100);
  CHECK(g.selected_primes == Primes{2, 3});
  CHECK(g.error == 0.0);
  CHECK(g.exact_hit);
  REQUIRE(g.exact_ratio);
  CHECK(*g.exact_ratio == Rational::integer(2));

  g = greedy_subseries(DensityKind::kPsiOverV, 1.2, 100);
  CHECK(g.selected_primes == Primes{5});
  CHECK(g.error == 0.0);
  CHECK(*g.exact_ratio == Rational(6, 5));

  g = greedy_subseries(DensityKind::kPsiOverV, 1.5, 100);
  CHECK(g.selected_primes == Primes{2});
  CHECK(g.error == 0.0);

  g = greedy_subseries(DensityKind::kVOverPhi, 2.0, 100);
  CHECK(g.selected_primes == Primes{2});
  CHECK(g.error == 0.0);

  g = greedy_subseries(DensityKind::kVOverPhi, 3.0, 100);
  CHECK(g.selected_primes == Primes{2, 3});
  CHECK(g.error == 0.0);
}

TEST_CASE("greedy near-identity target") {
  const auto g = greedy_subseries(DensityKind::kPsiOverV, 1.0 + 1e-9, 10);
  CHECK(g.selected_primes.size() <= 1);
  CHECK(g.log_product <= std::log(1.0 + 1e-9));
  CHECK(g.selected_primes.empty());
  CHECK_FALSE(g.limit_saturated);
  CHECK(g.gap_bound == doctest::Approx(std::log1p(1.0 / 7)));
}

TEST_CASE("greedy input errors") {
  CHECK_THROWS_AS(greedy_subseries(DensityKind::kPsiOverV, 1.0, 100), InvalidInput);
  CHECK_THROWS_AS(greedy_subseries(DensityKind::kPsiOverV, 0.5, 100), InvalidInput);
  CHECK_THROWS_AS(greedy_subseries(DensityKind::kPsiOverV, NAN, 100), InvalidInput);
  CHECK_THROWS_AS(greedy_subseries(DensityKind::kPsiOverV, 2.0, 1), InvalidInput);
  CHECK_THROWS_AS(parse_density_kind("v_over_sigma"), InvalidInput);
}

TEST_CASE("greedy saturates when every prime fits") {
  const auto g = greedy_subseries(DensityKind::kVOverPhi, 1000.0, 30);
  CHECK(g.limit_saturated);
  CHECK(g.selected_primes == Primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  check_never_overshoots(g);
}

TEST_CASE("greedy gap bound and error bound") {
  const SpfTable table(100'000);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(1.01, 10.0);
  for (int i = 0; i < 40; ++i) {
    const double delta = dist(rng);
    for (auto kind : {DensityKind::kPsiOverV, DensityKind::kVOverPhi}) {
      const auto g = greedy_subseries(kind, delta, 100'000, table.primes());
      check_never_overshoots(g);
      REQUIRE_FALSE(g.limit_saturated);
      // The largest prime below the limit that was not selected.
      std::uint64_t last_skipped = 0;
      for (auto it = table.primes().rbegin(); it != table.primes().rend(); ++it) {
        if (std::find(g.selected_primes.begin(), g.selected_primes.end(), *it) ==
            g.selected_primes.end()) {
          last_skipped = *it;
          break;
        }
      }
      REQUIRE(last_skipped != 0);
      CHECK(g.gap_bound <= std::log1p(term(kind, last_skipped)) + 1e-15);
      CHECK(std::log(delta) - g.log_product <= g.gap_bound + 1e-12);
      CHECK(g.error <= g.achieved * std::expm1(g.gap_bound) + 1e-12);
    }
  }
}

TEST_CASE("monotone refinement in the prime limit") {
  const SpfTable table(200'000);
  for (double delta : {1.05, 1.3, 2.7, 7.5}) {
    for (auto kind : {DensityKind::kPsiOverV, DensityKind::kVOverPhi}) {
      double previous = INFINITY;
      for (std::uint64_t limit : {10ull, 100ull, 1000ull, 10'000ull, 200'000ull}) {
        const auto g = greedy_subseries(kind, delta, limit, table.primes());
        CHECK(g.error <= previous);
        previous = g.error;
      }
    }
  }
}

TEST_CASE("evaluate_ratio") {
  auto r = evaluate_ratio(DensityKind::kPsiOverV, {});
  CHECK(*r.exact == Rational::integer(1));
  CHECK(r.value == 1.0);

  const Primes p23{2, 3};
  r = evaluate_ratio(DensityKind::kPsiOverV, p23);
  CHECK(*r.exact == Rational::integer(2));
  const auto six = factorize(6);
  CHECK(psi_of(six) == 12);
  CHECK(v_of(six) == 6);

  const Primes p35{3, 5};
  r = evaluate_ratio(DensityKind::kVOverPhi, p35);
  CHECK(*r.exact == Rational(15, 8));
  CHECK(r.value == doctest::Approx(15.0 / 8.0));

  const Primes bad{5, 3};
  CHECK_THROWS_AS(evaluate_ratio(DensityKind::kPsiOverV, bad), InvalidInput);
  const Primes composite{4};
  CHECK_THROWS_AS(evaluate_ratio(DensityKind::kPsiOverV, composite), InvalidInput);
}

TEST_CASE("evaluate_ratio drops the rational past 128 bits") {
  const SpfTable table(2000);
  Primes many(table.primes().begin(), table.primes().end());
  const auto r = evaluate_ratio(DensityKind::kPsiOverV, many);
  CHECK_FALSE(r.exact);
  CHECK(std::isfinite(r.log_value));
  CHECK(r.log_value > 0);
}

TEST_CASE("evaluate_ratio agrees with core arithmetic and direct products") {
  const SpfTable table(60);
  const auto primes = table.primes();
  // Every subset of the first 12 primes.
  for (unsigned mask = 0; mask < (1u << 12); mask += 7) {
    Primes subset;
    for (unsigned i = 0; i < 12; ++i) {
      if (mask & (1u << i)) subset.push_back(primes[i]);
    }
    std::vector<PrimePower> pp;
    for (auto p : subset) pp.push_back({p, 1});
    const auto m = Factorization::from_factors(pp);
    for (auto kind : {DensityKind::kPsiOverV, DensityKind::kVOverPhi}) {
      const auto r = evaluate_ratio(kind, subset);
      const auto [num, den] = direct_ratio(kind, subset);
      REQUIRE(r.exact->num() == num);
      REQUIRE(r.exact->den() == den);
      const Rational core = kind == DensityKind::kPsiOverV
                                ? Rational(psi_of(m), v_of(m))
                                : Rational(v_of(m), phi_of(m));
      REQUIRE(*r.exact == core);
      REQUIRE(r.value == doctest::Approx(static_cast<double>(num) / den));
    }
  }
}

TEST_CASE("random targets converge with primes up to 10^6") {
  const SpfTable table(1'000'000);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(1.01, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double delta = dist(rng);
    for (auto kind : {DensityKind::kPsiOverV, DensityKind::kVOverPhi}) {
      const auto g = greedy_subseries(kind, delta, 1'000'000, table.primes());
      REQUIRE_MESSAGE(g.error <= 1e-4, to_string(kind) << " delta=" << delta);
    }
  }
}
