#include "vreg/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "vreg/arith.hpp"
#include "vreg/density.hpp"
#include "vreg/error.hpp"
#include "vreg/sieve.hpp"
#include "vreg/witness.hpp"

namespace vreg {

namespace {

constexpr std::size_t kMaxFailureMessages = 10;

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (result_.failures.size() < kMaxFailureMessages) {
      result_.failures.push_back(what);
    }
  }

  // Runs fn, recording any exception as a failure.
  template <typename Fn>
  void guarded(const std::string& what, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

SuiteResult oracle_suite(std::uint64_t limit) {
  Recorder rec("oracle");
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const auto v = v_of(factorize(n));
    const auto brute = brute_force_regular_count(n);
    rec.expect(v == brute, "n=" + std::to_string(n) + ": V=" +
                               std::to_string(v) + " brute=" +
                               std::to_string(brute));
  }
  return rec.take();
}

SuiteResult identities_suite(std::uint64_t limit) {
  Recorder rec("identities");
  if (limit < 2) throw InvalidInput("identities: limit must be >= 2");
  const SpfTable table(limit);
  for_each_profile(table, 2, limit, [&](const ArithProfile& p) {
    const auto bad = check_profile(p);
    rec.expect(!bad, bad.value_or(""));
  });
  return rec.take();
}

SuiteResult multiplicative_suite(std::uint64_t limit) {
  Recorder rec("multiplicative");
  for (std::uint64_t m = 1; m <= limit; ++m) {
    const auto fm = profile(m);
    for (std::uint64_t n = 1; n <= limit; ++n) {
      const auto fn = profile(n);
      const auto fmn = profile(m * n);
      const std::string tag =
          "m=" + std::to_string(m) + " n=" + std::to_string(n);
      rec.expect(fmn.v <= m * fn.v, tag + ": V(mn) <= m V(n)");
      if (std::gcd(m, n) == 1) {
        rec.expect(fmn.v == fm.v * fn.v && fmn.phi == fm.phi * fn.phi &&
                       fmn.psi == fm.psi * fn.psi &&
                       fmn.sigma == fm.sigma * fn.sigma,
                   tag + ": multiplicativity");
      }
    }
  }
  return rec.take();
}

SuiteResult sets_suite(std::uint64_t limit) {
  Recorder rec("sets");
  const SpfTable table(limit + 1);
  const auto r = scan(table, 1, limit);
  rec.expect(r.trichotomy_holds(), "trichotomy");
  rec.expect(r.violations.empty(), "identity violations in scan");
  rec.expect(r.a_count >= limit / 10, "|A| = " + std::to_string(r.a_count));
  rec.expect(r.b_count >= limit / 10, "|B| = " + std::to_string(r.b_count));
  for (std::uint64_t n : r.equal_points) {
    rec.expect(v_of(factorize(n)) == v_of(factorize(n + 1)),
               "equal point " + std::to_string(n));
  }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint64_t> pick(1, limit);
  for (int i = 0; i < 1000; ++i) {
    const auto n = pick(rng);
    const auto diff = static_cast<std::int64_t>(v_of(factorize(n + 1))) -
                      static_cast<std::int64_t>(v_of(factorize(n)));
    const auto& list = diff > 0   ? r.a_members
                       : diff < 0 ? r.b_members
                                  : r.equal_points;
    const bool listed = (diff != 0 && !r.lists_stored) ||
                        std::binary_search(list.begin(), list.end(), n);
    rec.expect(listed, "membership of n=" + std::to_string(n));
  }
  return rec.take();
}

SuiteResult gaps_suite(std::uint64_t limit) {
  Recorder rec("gaps");
  const SpfTable table(limit);
  const auto r = scan(table, 1, limit - 1);
  const auto threshold = static_cast<std::int64_t>(limit / 10);
  rec.expect(r.max_diff.diff >= threshold,
             "max diff " + std::to_string(r.max_diff.diff));
  rec.expect(r.min_diff.diff <= -threshold,
             "min diff " + std::to_string(r.min_diff.diff));
  for (auto dir : {GapDirection::kUp, GapDirection::kDown}) {
    std::int64_t previous = 0;
    for (std::uint64_t p_min = 10; p_min <= std::max<std::uint64_t>(limit / 10, 10);
         p_min *= 10) {
      rec.guarded("gap witness", [&] {
        const auto w = prop3_gap_witness(dir, p_min);
        rec.expect(w.all_checks_pass(), "gap witness checks");
        const auto gap = std::stoll(w.aux("gap"));
        rec.expect(gap > previous, "gap witnesses strictly increase");
        previous = gap;
      });
    }
  }
  return rec.take();
}

SuiteResult witness_suite(std::uint64_t max_steps) {
  Recorder rec("witness");
  const std::vector<std::vector<std::uint64_t>> sets = {{2, 3}, {3, 5}, {2, 3, 5}};
  for (const auto& s : sets) {
    rec.guarded("prop1_ascending", [&] {
      rec.expect(prop1_ascending_witness(s, max_steps).all_checks_pass(),
                 "prop1_ascending checks");
    });
    rec.guarded("prop1_descending", [&] {
      rec.expect(prop1_descending_witness(s, max_steps).all_checks_pass(),
                 "prop1_descending checks");
    });
  }
  for (std::uint64_t x : {3, 5, 7, 11, 13}) {
    const auto tag = "x=" + std::to_string(x);
    rec.guarded("prop2_liminf " + tag, [&] {
      rec.expect(linnik_witness_liminf(x, max_steps).all_checks_pass(),
                 "prop2_liminf checks " + tag);
    });
    rec.guarded("prop2_limsup " + tag, [&] {
      rec.expect(linnik_witness_limsup(x, max_steps).all_checks_pass(),
                 "prop2_limsup checks " + tag);
    });
  }
  return rec.take();
}

SuiteResult density_suite(std::uint64_t prime_limit) {
  Recorder rec("density");
  const SpfTable table(prime_limit);
  for (auto kind : {DensityKind::kPsiOverV, DensityKind::kVOverPhi}) {
    for (double delta : {1.1, 1.41421356, 2.0, 3.0, 10.0}) {
      const auto tag = std::string(to_string(kind)) + " delta=" +
                       std::to_string(delta);
      const auto g = greedy_subseries(kind, delta, prime_limit, table.primes());
      rec.expect(g.error <= 1e-4, tag + ": error " + std::to_string(g.error));
      bool never_over = true;
      for (double lp : g.trajectory) never_over = never_over && lp <= std::log(delta);
      rec.expect(never_over, tag + ": overshoot");
      if (g.selected_primes.size() <= 15 && g.exact_ratio) {
        std::vector<PrimePower> pp;
        for (auto p : g.selected_primes) pp.push_back({p, 1});
        const auto m = Factorization::from_factors(pp);
        const Rational core = kind == DensityKind::kPsiOverV
                                  ? Rational(psi_of(m), v_of(m))
                                  : Rational(v_of(m), phi_of(m));
        rec.expect(*g.exact_ratio == core, tag + ": core ratio mismatch");
      }
    }
  }
  const std::vector<std::pair<DensityKind, std::pair<double, std::vector<std::uint64_t>>>>
      hits = {{DensityKind::kPsiOverV, {2.0, {2, 3}}},
              {DensityKind::kPsiOverV, {1.5, {2}}},
              {DensityKind::kPsiOverV, {1.2, {5}}},
              {DensityKind::kVOverPhi, {2.0, {2}}}};
  for (const auto& [kind, target] : hits) {
    const auto g = greedy_subseries(kind, target.first, prime_limit, table.primes());
    rec.expect(g.selected_primes == target.second && g.error == 0.0 && g.exact_hit,
               std::string(to_string(kind)) + " exact hit " +
                   std::to_string(target.first));
  }
  return rec.take();
}

}  // namespace

std::uint64_t brute_force_regular_count(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= n; ++a) {
    const std::uint64_t target = a % n;
    const std::uint64_t step = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * a % n);
    // a^2 x mod n for x = 0, 1, ..., n-1, accumulated.
    std::uint64_t value = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
      if (value == target) {
        ++count;
        break;
      }
      value += step;
      if (value >= n) value -= n;
    }
  }
  return count;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {
      "oracle", "identities", "multiplicative", "sets",
      "gaps",  "witness",    "density"};
  return names;
}

SuiteResult run_suite(std::string_view name,
                      std::optional<std::uint64_t> limit) {
  if (limit && *limit == 0) throw InvalidInput("limit must be positive");
  if (name == "oracle") return oracle_suite(limit.value_or(3000));
  if (name == "identities") return identities_suite(limit.value_or(1'000'000));
  if (name == "multiplicative") return multiplicative_suite(limit.value_or(200));
  if (name == "sets") return sets_suite(limit.value_or(100'000));
  if (name == "gaps") return gaps_suite(std::max<std::uint64_t>(limit.value_or(1'000'000), 3));
  if (name == "witness") return witness_suite(limit.value_or(kDefaultMaxSteps));
  if (name == "density") return density_suite(std::max<std::uint64_t>(limit.value_or(1'000'000), 2));
  throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

}  // namespace vreg
