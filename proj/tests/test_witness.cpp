#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "vreg/error.hpp"
#include "vreg/witness.hpp"

using namespace vreg;

namespace {

// V through the brute-force factor loop; fine for the small values here.
std::uint64_t slow_v(std::uint64_t n) {
  std::uint64_t v = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint64_t pe = 1;
    while (n % p == 0) n /= p, pe *= p;
    v *= pe - pe / p + 1;
  }
  if (n > 1) v *= n;
  return v;
}

// Minimality: no smaller progression member is prime.
void check_least(std::uint64_t first, std::uint64_t modulus,
                 std::uint64_t witness) {
  for (std::uint64_t t = first; t < witness; t += modulus) {
    REQUIRE_MESSAGE(!oracle::is_prime(t), "smaller prime " << t);
  }
}

void check_invariants(const WitnessReport& r) {
  CHECK(r.witness_prime % r.modulus == r.residue % r.modulus);
  CHECK(oracle::is_prime(r.witness_prime));
  CHECK(r.all_checks_pass());
  CHECK(r.steps_tried >= 1);
}

}  // namespace

TEST_CASE("dirichlet_prime examples") {
  CHECK(dirichlet_prime(1, 6, 100).prime == 7);
  CHECK(dirichlet_prime(1, 15, 100).prime == 31);
  CHECK(dirichlet_prime(1, 15, 100).steps_tried == 2);
  CHECK(dirichlet_prime(normalize_residue(-1, 12), 12, 100).prime == 11);
  CHECK(normalize_residue(-1, 12) == 11);
  CHECK(normalize_residue(-24, 12) == 0);
  CHECK(normalize_residue(25, 12) == 1);
}

TEST_CASE("dirichlet_prime errors") {
  CHECK_THROWS_AS(dirichlet_prime(2, 6, 100), InvalidInput);
  CHECK_THROWS_AS(dirichlet_prime(1, 1, 100), InvalidInput);
  try {
    dirichlet_prime(1, 6, 0);
    FAIL("expected NotFound");
  } catch (const NotFound& e) {
    CHECK(e.steps_tried() == 0);
  }
  // 1 (mod 1000): 1001, 2001, 3001 (prime). Two steps are not enough.
  CHECK_THROWS_AS(dirichlet_prime(1, 1000, 2), NotFound);
  CHECK(dirichlet_prime(1, 1000, 3).prime == 3001);
  // Terms past 2^64 are refused rather than wrapped.
  CHECK_THROWS_AS(dirichlet_prime(1, 1ull << 62, 100), ArithmeticOverflow);
}

TEST_CASE("dirichlet_prime minimality on random progressions") {
  for (std::uint64_t m = 2; m <= 60; ++m) {
    for (std::uint64_t r = 0; r < m; ++r) {
      if (oracle::gcd(r, m) != 1) continue;
      const auto hit = dirichlet_prime(r, m, 10'000);
      REQUIRE(hit.prime % m == r);
      REQUIRE(oracle::is_prime(hit.prime));
      check_least(r, m, hit.prime);
    }
  }
}

TEST_CASE("ascending witnesses") {
  const std::vector<std::uint64_t> s23{2, 3}, s35{3, 5}, s235{2, 3, 5};
  auto r = prop1_ascending_witness(s23);
  CHECK(r.witness_prime == 7);
  CHECK(r.aux("V(p-1)") == "6");
  check_invariants(r);
  r = prop1_ascending_witness(s35);
  CHECK(r.witness_prime == 31);
  CHECK(r.aux("V(p-1)") == "30");
  CHECK(r.aux("a") == "2");
  check_invariants(r);
  r = prop1_ascending_witness(s235);
  CHECK(r.witness_prime == 31);
  CHECK(r.aux("a") == "1");
  check_invariants(r);
  // Recomputed independently.
  CHECK(slow_v(30) < slow_v(31));
}

TEST_CASE("descending witnesses") {
  const std::vector<std::uint64_t> s23{2, 3}, s35{3, 5}, s25{2, 5};
  auto r = prop1_descending_witness(s23);
  CHECK(r.witness_prime == 11);
  CHECK(r.modulus == 12);
  CHECK(r.aux("b") == "1");
  CHECK(r.aux("V(q+1)") == "9");
  check_invariants(r);
  r = prop1_descending_witness(s35);
  CHECK(r.witness_prime == 89);
  CHECK(r.modulus == 45);
  CHECK(r.aux("b") == "2");
  CHECK(r.aux("V(q+1)") == "70");
  check_invariants(r);
  r = prop1_descending_witness(s25);
  CHECK(r.witness_prime == 19);
  CHECK(r.modulus == 20);
  CHECK(r.aux("V(q+1)") == "15");
  check_invariants(r);
  CHECK(slow_v(90) == 70);
}

TEST_CASE("descending search passes over the degenerate b = 1 term for {2}") {
  const std::vector<std::uint64_t> s2{2};
  const auto r = prop1_descending_witness(s2);
  // q = 3 gives V(4) = V(3); the next prime 7 = 2 * 4 - 1 works.
  CHECK(r.witness_prime == 7);
  check_invariants(r);
}

TEST_CASE("prime-set input validation") {
  const std::vector<std::uint64_t> empty, dup{3, 3}, composite{2, 4};
  CHECK_THROWS_AS(prop1_ascending_witness(empty), InvalidInput);
  CHECK_THROWS_AS(prop1_ascending_witness(dup), InvalidInput);
  CHECK_THROWS_AS(prop1_descending_witness(composite), InvalidInput);
}

TEST_CASE("linnik liminf witnesses") {
  auto r = linnik_witness_liminf(3);
  CHECK(r.witness_prime == 7);
  CHECK(r.modulus == 36);
  CHECK(r.aux("A") == "6");
  CHECK(r.aux("B") == "1");
  CHECK(r.aux("k") == "0");
  check_invariants(r);

  r = linnik_witness_liminf(5);
  CHECK(r.witness_prime == 31);
  CHECK(r.modulus == 900);
  check_invariants(r);

  r = linnik_witness_liminf(7);
  CHECK(r.witness_prime == 211);
  CHECK(r.modulus == 44100);
  CHECK(r.aux("B") == "1");
  check_invariants(r);

  r = linnik_witness_liminf(13);
  CHECK(r.witness_prime == 901830931);
  CHECK(r.aux("B") == "30031");  // 59 * 509
  CHECK(r.aux("k") == "1");
  check_invariants(r);
  check_least(30031, 30030ull * 30030ull, r.witness_prime);
}

TEST_CASE("linnik limsup witnesses") {
  auto r = linnik_witness_limsup(3);
  CHECK(r.witness_prime == 17);
  CHECK(r.aux("A") == "18");
  CHECK(r.aux("B") == "1");
  CHECK(r.aux("V(q+1)") == "14");
  check_invariants(r);

  r = linnik_witness_limsup(5);
  CHECK(r.witness_prime == 149);
  CHECK(r.modulus == 22500);
  CHECK(r.aux("V(q+1)") == "126");
  check_invariants(r);

  r = linnik_witness_limsup(7);
  CHECK(r.witness_prime == 6484169);
  CHECK(r.aux("B") == "4411");
  check_invariants(r);
  check_least(1469, 1470ull * 1470ull, r.witness_prime);

  // Every report carries the V(q+1) <= q - 1 check, passing.
  bool found = false;
  for (const auto& c : r.checks) {
    if (c.description == "V(q+1) <= q - 1") found = c.pass;
  }
  CHECK(found);
}

TEST_CASE("linnik searches refuse moduli wider than 64 bits") {
  CHECK_THROWS_AS(linnik_witness_liminf(29), ArithmeticOverflow);
  CHECK_THROWS_AS(linnik_witness_limsup(23), ArithmeticOverflow);
  CHECK_NOTHROW(linnik_witness_limsup(19));
  CHECK_THROWS_AS(linnik_witness_liminf(2), InvalidInput);
}

TEST_CASE("linnik liminf decomposition is an exact rational identity") {
  for (std::uint64_t x : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const auto r = linnik_witness_liminf(x);
    const auto q = r.witness_prime;
    const auto a = std::stoull(r.aux("A"));
    const auto b = std::stoull(r.aux("B"));
    REQUIRE(q - 1 == a * b);
    REQUIRE(slow_v(a) == a);
    // V(q)/V(q-1) in lowest terms, computed here from scratch.
    const auto vq1 = slow_v(q - 1);
    const auto g = oracle::gcd(q, vq1);
    const std::string expected =
        std::to_string(q / g) + (vq1 / g == 1 ? "" : "/" + std::to_string(vq1 / g));
    bool seen = false;
    for (const auto& c : r.checks) {
      if (c.description.rfind("V(q)/V(q-1) = ", 0) == 0) {
        seen = true;
        CHECK(c.lhs == expected);
        CHECK(c.rhs == expected);
        CHECK(c.pass);
      }
    }
    CHECK(seen);
    CHECK(r.all_checks_pass());
  }
}

TEST_CASE("gap witnesses") {
  auto r = prop3_gap_witness(GapDirection::kUp, 100);
  CHECK(r.witness_prime == 101);
  CHECK(r.aux("V(p-1)") == "63");
  CHECK(r.aux("gap") == "38");
  check_invariants(r);

  r = prop3_gap_witness(GapDirection::kDown, 100);
  CHECK(r.witness_prime == 103);
  CHECK(r.aux("V(p+1)") == "65");
  CHECK(r.aux("gap") == "38");
  check_invariants(r);

  r = prop3_gap_witness(GapDirection::kUp, 5);
  CHECK(r.witness_prime == 5);
  CHECK(r.aux("gap") == "2");  // equality case: (5 + 3) / 4 = 2
  check_invariants(r);

  CHECK_THROWS_AS(prop3_gap_witness(GapDirection::kUp, 4), InvalidInput);
}

TEST_CASE("gap witnesses grow strictly") {
  for (auto dir : {GapDirection::kUp, GapDirection::kDown}) {
    std::int64_t previous = 0;
    for (std::uint64_t p_min : {10ull, 100ull, 1000ull, 10000ull, 100000ull}) {
      const auto r = prop3_gap_witness(dir, p_min);
      check_invariants(r);
      const auto p = r.witness_prime;
      REQUIRE(p >= p_min);
      check_least(p_min + (r.residue + 4 - p_min % 4) % 4, 4, p);
      const auto neighbour = dir == GapDirection::kUp ? p - 1 : p + 1;
      const auto gap = static_cast<std::int64_t>(p) -
                       static_cast<std::int64_t>(slow_v(neighbour));
      CHECK(std::to_string(gap) == r.aux("gap"));
      CHECK(gap > previous);
      previous = gap;
    }
  }
}

TEST_CASE("witness kind names round-trip") {
  for (auto kind : {WitnessKind::kProp1Ascending, WitnessKind::kProp1Descending,
                    WitnessKind::kProp2Liminf, WitnessKind::kProp2Limsup,
                    WitnessKind::kProp3Up, WitnessKind::kProp3Down}) {
    CHECK(parse_witness_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_witness_kind("prop4"), InvalidInput);
}
