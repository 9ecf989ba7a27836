#include "vreg/witness.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "vreg/arith.hpp"
#include "vreg/checked.hpp"
#include "vreg/error.hpp"
#include "vreg/rational.hpp"

namespace vreg {

namespace {

using std::uint64_t;

std::string dec(uint64_t v) { return std::to_string(v); }

Check make_check(std::string description, std::string lhs,
                 std::string relation, std::string rhs, bool pass) {
  return Check{std::move(description), std::move(lhs), std::move(relation),
               std::move(rhs), pass};
}

Check eq_check(std::string description, uint64_t lhs, uint64_t rhs) {
  return make_check(std::move(description), dec(lhs), "==", dec(rhs),
                    lhs == rhs);
}

Check rational_check(std::string description, const Rational& lhs,
                     std::string relation, const Rational& rhs) {
  bool pass = false;
  if (relation == "==") pass = lhs == rhs;
  if (relation == "<") pass = lhs < rhs;
  if (relation == ">") pass = lhs > rhs;
  if (relation == "<=") pass = lhs <= rhs;
  if (relation == ">=") pass = lhs >= rhs;
  return make_check(std::move(description), lhs.str(), std::move(relation),
                    rhs.str(), pass);
}

uint64_t v_of_n(uint64_t n) { return v_of(factorize(n)); }

// Walks first, first + modulus, ... and returns the first prime term that
// also satisfies `accept`. Terms below 2 are skipped without costing a step.
ProgressionHit search_progression(
    uint64_t first, uint64_t modulus, uint64_t max_steps,
    const std::function<bool(uint64_t)>& accept = nullptr) {
  u128 term = first;
  uint64_t steps = 0;
  while (steps < max_steps) {
    if (term > std::numeric_limits<uint64_t>::max()) {
      throw ArithmeticOverflow(
          "progression term exceeds 64 bits after " + dec(steps) + " steps");
    }
    const auto t = static_cast<uint64_t>(term);
    term += modulus;
    if (t < 2) continue;
    ++steps;
    if (is_prime(t) && (!accept || accept(t))) return {t, steps};
  }
  throw NotFound("no prime = " + dec(first % modulus) + " (mod " +
                     dec(modulus) + ") found",
                 steps);
}

void validate_prime_list(std::span<const uint64_t> primes) {
  if (primes.empty()) throw InvalidInput("prime list must be nonempty");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) {
      throw InvalidInput(dec(primes[i]) + " is not prime");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (primes[j] == primes[i]) {
        throw InvalidInput("prime list entries must be distinct");
      }
    }
  }
}

uint64_t product(std::span<const uint64_t> values) {
  uint64_t r = 1;
  for (uint64_t v : values) r = checked_mul(r, v);
  return r;
}

// Number of distinct primes <= x dividing n.
uint64_t small_prime_divisors(uint64_t n, uint64_t x) {
  const auto f = factorize(n);
  return static_cast<uint64_t>(
      std::count_if(f.factors().begin(), f.factors().end(),
                    [x](const PrimePower& pp) { return pp.prime <= x; }));
}

unsigned max_exponent(uint64_t n) {
  unsigned e = 0;
  for (const auto& pp : factorize(n).factors()) e = std::max(e, pp.exponent);
  return e;
}

uint64_t squared_modulus(uint64_t a) {
  u128 sq = static_cast<u128>(a) * a;
  if (sq > std::numeric_limits<uint64_t>::max()) {
    throw ArithmeticOverflow("modulus A^2 = " + format_u128(sq) +
                             " exceeds 64 bits");
  }
  return static_cast<uint64_t>(sq);
}

uint64_t largest_prime_at_most(uint64_t x) {
  for (uint64_t p = x; p >= 2; --p) {
    if (is_prime(p)) return p;
  }
  throw InvalidInput("no prime <= " + dec(x));
}

}  // namespace

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kProp1Ascending: return "prop1_ascending";
    case WitnessKind::kProp1Descending: return "prop1_descending";
    case WitnessKind::kProp2Liminf: return "prop2_liminf";
    case WitnessKind::kProp2Limsup: return "prop2_limsup";
    case WitnessKind::kProp3Up: return "prop3_up";
    case WitnessKind::kProp3Down: return "prop3_down";
  }
  return "unknown";
}

WitnessKind parse_witness_kind(std::string_view name) {
  for (auto kind : {WitnessKind::kProp1Ascending, WitnessKind::kProp1Descending,
                    WitnessKind::kProp2Liminf, WitnessKind::kProp2Limsup,
                    WitnessKind::kProp3Up, WitnessKind::kProp3Down}) {
    if (to_string(kind) == name) return kind;
  }
  throw InvalidInput("unknown witness kind '" + std::string(name) + "'");
}

bool WitnessReport::all_checks_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

const std::string& WitnessReport::aux(std::string_view key) const {
  for (const auto& [k, v] : auxiliary) {
    if (k == key) return v;
  }
  throw std::out_of_range("no auxiliary field '" + std::string(key) + "'");
}

std::uint64_t normalize_residue(std::int64_t residue, std::uint64_t modulus) {
  if (modulus == 0) throw InvalidInput("modulus must be positive");
  if (residue >= 0) return static_cast<uint64_t>(residue) % modulus;
  const auto magnitude =
      static_cast<uint64_t>(-(residue + 1)) + 1;  // safe for INT64_MIN
  const uint64_t r = magnitude % modulus;
  return r == 0 ? 0 : modulus - r;
}

ProgressionHit dirichlet_prime(std::uint64_t residue, std::uint64_t modulus,
                               std::uint64_t max_steps) {
  if (modulus < 2) throw InvalidInput("dirichlet_prime: modulus must be >= 2");
  const uint64_t r = residue % modulus;
  if (gcd(r, modulus) != 1) {
    throw InvalidInput("dirichlet_prime: residue " + dec(r) +
                       " is not coprime to modulus " + dec(modulus));
  }
  return search_progression(r, modulus, max_steps);
}

WitnessReport prop1_ascending_witness(std::span<const std::uint64_t> primes,
                                      std::uint64_t max_steps) {
  validate_prime_list(primes);
  const uint64_t modulus = product(primes);
  const auto hit = dirichlet_prime(1, modulus, max_steps);
  const uint64_t p = hit.prime;
  const uint64_t a = (p - 1) / modulus;
  const uint64_t v_p = v_of_n(p);
  const uint64_t v_prev = v_of_n(p - 1);

  WitnessReport r;
  r.kind = WitnessKind::kProp1Ascending;
  r.witness_prime = p;
  r.modulus = modulus;
  r.residue = 1 % modulus;
  r.steps_tried = hit.steps_tried;
  r.checks.push_back(eq_check("p = 1 + a * p1...pr", p, checked_add(1, checked_mul(a, modulus))));
  r.checks.push_back(make_check("p is prime", dec(p), "is", "prime", is_prime(p)));
  r.checks.push_back(eq_check("V(p) = p", v_p, p));
  r.checks.push_back(make_check("V(p-1) <= p-1", dec(v_prev), "<=", dec(p - 1),
                                v_prev <= p - 1));
  r.checks.push_back(rational_check("V(p-1)/V(p) < 1", Rational(v_prev, v_p),
                                    "<", Rational::integer(1)));
  r.checks.push_back(rational_check("V(p)/V(p-1) > 1, so p-1 is in A",
                                    Rational(v_p, v_prev), ">",
                                    Rational::integer(1)));
  r.auxiliary = {{"a", dec(a)}, {"V(p-1)", dec(v_prev)}};
  return r;
}

WitnessReport prop1_descending_witness(std::span<const std::uint64_t> primes,
                                       std::uint64_t max_steps) {
  validate_prime_list(primes);
  const uint64_t first = primes.front();
  const uint64_t rest = product(primes.subspan(1));
  const uint64_t modulus = checked_mul(checked_mul(first, first), rest);
  // V(p1^2) * p2...pr, the per-unit bound on V(q+1) / b.
  const uint64_t unit_bound = checked_mul(v_of_prime_power(first, 2), rest);
  // The strict inequality needs b (p1 - 1) p2...pr > 1; only {2} with b = 1
  // violates it (q = 3, V(4) = V(3)), so such terms are passed over.
  auto bound_is_strict = [&](uint64_t q) {
    const uint64_t b = (q + 1) / modulus;
    return static_cast<u128>(b) * (first - 1) * rest > 1;
  };
  const auto hit =
      search_progression(modulus - 1, modulus, max_steps, bound_is_strict);
  const uint64_t q = hit.prime;
  const uint64_t b = (q + 1) / modulus;
  const uint64_t bound = checked_mul(b, unit_bound);
  const uint64_t v_q = v_of_n(q);
  const uint64_t v_next = v_of_n(q + 1);

  WitnessReport r;
  r.kind = WitnessKind::kProp1Descending;
  r.witness_prime = q;
  r.modulus = modulus;
  r.residue = modulus - 1;
  r.steps_tried = hit.steps_tried;
  r.checks.push_back(eq_check("q + 1 = b * p1^2 p2...pr", checked_add(q, 1),
                              checked_mul(b, modulus)));
  r.checks.push_back(make_check("q is prime", dec(q), "is", "prime", is_prime(q)));
  r.checks.push_back(eq_check("V(q) = q", v_q, q));
  r.checks.push_back(make_check("V(q+1) <= b (p1^2 - p1 + 1) p2...pr",
                                dec(v_next), "<=", dec(bound),
                                v_next <= bound));
  r.checks.push_back(rational_check(
      "(b p1^2 p2...pr - 1) / (b (p1^2 - p1 + 1) p2...pr) > 1",
      Rational(q, bound), ">", Rational::integer(1)));
  r.checks.push_back(rational_check("V(q+1)/V(q) < 1, so q is in B",
                                    Rational(v_next, v_q), "<",
                                    Rational::integer(1)));
  r.auxiliary = {{"b", dec(b)}, {"bound", dec(bound)}, {"V(q+1)", dec(v_next)}};
  return r;
}

std::uint64_t primorial(std::uint64_t x) {
  uint64_t a = 1;
  for (uint64_t p = 2; p <= x; ++p) {
    if (is_prime(p)) a = checked_mul(a, p);
  }
  return a;
}

WitnessReport linnik_witness_liminf(std::uint64_t x, std::uint64_t max_steps) {
  if (x < 3) throw InvalidInput("linnik_witness_liminf: x must be >= 3");
  const uint64_t a = primorial(x);
  const uint64_t modulus = squared_modulus(a);
  const uint64_t residue = a + 1;
  // k = 0 is admissible: the congruence alone defines the witness.
  const auto hit = search_progression(residue, modulus, max_steps);
  const uint64_t q = hit.prime;
  const uint64_t k = (q - residue) / modulus;
  const uint64_t b = (q - 1) / a;

  const uint64_t v_q = v_of_n(q);
  const uint64_t v_prev = v_of_n(q - 1);
  const uint64_t v_a = v_of_n(a);
  const uint64_t v_b = v_of_n(b);

  const Rational ratio(v_q, v_prev);
  const Rational shift(static_cast<u128>(a) * b + 1, static_cast<u128>(a) * b);
  const Rational decomposition =
      shift * Rational(a, v_a) * Rational(b, v_b);

  WitnessReport r;
  r.kind = WitnessKind::kProp2Liminf;
  r.witness_prime = q;
  r.modulus = modulus;
  r.residue = residue;
  r.steps_tried = hit.steps_tried;
  r.checks.push_back(eq_check("q = A + 1 (mod A^2)", q % modulus, residue));
  r.checks.push_back(make_check("q is prime", dec(q), "is", "prime", is_prime(q)));
  r.checks.push_back(eq_check("q - A - 1 = k A^2", q - residue,
                              checked_mul(k, modulus)));
  r.checks.push_back(eq_check("q - 1 = A B", q - 1, checked_mul(a, b)));
  r.checks.push_back(eq_check("gcd(A, B) = 1", gcd(a, b), 1));
  r.checks.push_back(eq_check("B is free of prime factors <= x",
                              small_prime_divisors(b, x), 0));
  r.checks.push_back(eq_check("V(q) = q", v_q, q));
  r.checks.push_back(eq_check("V(q-1) = V(A) V(B)", v_prev, checked_mul(v_a, v_b)));
  r.checks.push_back(rational_check("A/V(A) = 1", Rational(a, v_a), "==",
                                    Rational::integer(1)));
  r.checks.push_back(rational_check(
      "V(q)/V(q-1) > 1, so q-1 is in A",
      ratio, ">", Rational::integer(1)));
  r.checks.push_back(rational_check(
      "V(q)/V(q-1) = (AB+1)/(AB) * A/V(A) * B/V(B)", ratio, "==",
      decomposition));
  r.auxiliary = {
      {"x", dec(x)},
      {"A", dec(a)},
      {"B", dec(b)},
      {"k", dec(k)},
      {"V(A)", dec(v_a)},
      {"V(B)", dec(v_b)},
      {"V(q-1)", dec(v_prev)},
      {"membership", "q-1 in A"},
      {"B/V(B)", Rational(b, v_b).str()},
  };
  return r;
}

WitnessReport linnik_witness_limsup(std::uint64_t x, std::uint64_t max_steps) {
  if (x < 3) throw InvalidInput("linnik_witness_limsup: x must be >= 3");
  const uint64_t top = largest_prime_at_most(x);
  const uint64_t a = checked_mul(top, primorial(x));
  const uint64_t modulus = squared_modulus(a);
  const uint64_t residue = a - 1;
  const auto hit = search_progression(residue, modulus, max_steps);
  const uint64_t q = hit.prime;
  const uint64_t k = (q - residue) / modulus;
  const uint64_t ab = checked_add(q, 1);
  const uint64_t b = ab / a;

  const uint64_t v_q = v_of_n(q);
  const uint64_t v_next = v_of_n(ab);
  const uint64_t v_a = v_of_n(a);
  const uint64_t v_b = v_of_n(b);

  const Rational ratio(v_next, v_q);
  const Rational decomposition = Rational(v_a, a) * Rational(v_b, b) *
                                 Rational(ab, ab - 1);
  const Rational top_factor(v_of_prime_power(top, 2),
                            static_cast<u128>(top) * top);

  WitnessReport r;
  r.kind = WitnessKind::kProp2Limsup;
  r.witness_prime = q;
  r.modulus = modulus;
  r.residue = residue;
  r.steps_tried = hit.steps_tried;
  r.checks.push_back(eq_check("q = A - 1 (mod A^2)", q % modulus, residue));
  r.checks.push_back(make_check("q is prime", dec(q), "is", "prime", is_prime(q)));
  r.checks.push_back(eq_check("q + 1 = A B", ab, checked_mul(a, b)));
  r.checks.push_back(eq_check("B = 1 + k A", b, checked_add(1, checked_mul(k, a))));
  r.checks.push_back(eq_check("gcd(A, B) = 1", gcd(a, b), 1));
  r.checks.push_back(eq_check("B is free of prime factors <= x",
                              small_prime_divisors(b, x), 0));
  r.checks.push_back(make_check("AB is not squarefree (max exponent)",
                                dec(max_exponent(ab)), ">=", "2",
                                max_exponent(ab) >= 2));
  r.checks.push_back(make_check("AB >= 8", dec(ab), ">=", "8", ab >= 8));
  r.checks.push_back(eq_check("V(q) = q", v_q, q));
  r.checks.push_back(make_check("V(q+1) <= q - 1", dec(v_next), "<=",
                                dec(q - 1), v_next <= q - 1));
  r.checks.push_back(rational_check("V(q+1)/V(q) < 1, so q is in B", ratio, "<",
                                    Rational::integer(1)));
  r.checks.push_back(rational_check("V(A)/A = (p_t^2 - p_t + 1)/p_t^2",
                                    Rational(v_a, a), "==", top_factor));
  r.checks.push_back(rational_check(
      "V(q+1)/V(q) = V(A)/A * V(B)/B * AB/(AB-1)", ratio, "==", decomposition));
  r.auxiliary = {
      {"x", dec(x)},
      {"p_t", dec(top)},
      {"A", dec(a)},
      {"B", dec(b)},
      {"k", dec(k)},
      {"V(A)", dec(v_a)},
      {"V(B)", dec(v_b)},
      {"V(q+1)", dec(v_next)},
      {"membership", "q in B"},
      {"V(B)/B", Rational(v_b, b).str()},
  };
  return r;
}

WitnessReport prop3_gap_witness(GapDirection direction, std::uint64_t p_min,
                                std::uint64_t max_steps) {
  if (p_min < 5) throw InvalidInput("prop3_gap_witness: p_min must be >= 5");
  const bool up = direction == GapDirection::kUp;
  const uint64_t residue = up ? 1 : 3;
  const uint64_t first = p_min + (residue + 4 - p_min % 4) % 4;
  const auto hit = search_progression(first, 4, max_steps);
  const uint64_t p = hit.prime;
  const uint64_t neighbour = up ? p - 1 : checked_add(p, 1);
  const uint64_t v_p = v_of_n(p);
  const uint64_t v_n = v_of_n(neighbour);
  const auto gap = static_cast<std::int64_t>(v_p) - static_cast<std::int64_t>(v_n);
  const std::string nb = up ? "p-1" : "p+1";

  WitnessReport r;
  r.kind = up ? WitnessKind::kProp3Up : WitnessKind::kProp3Down;
  r.witness_prime = p;
  r.modulus = 4;
  r.residue = residue;
  r.steps_tried = hit.steps_tried;
  r.checks.push_back(make_check("p >= p_min", dec(p), ">=", dec(p_min), p >= p_min));
  r.checks.push_back(eq_check("p = " + dec(residue) + " (mod 4)", p % 4, residue));
  r.checks.push_back(make_check("p is prime", dec(p), "is", "prime", is_prime(p)));
  r.checks.push_back(eq_check("4 | " + nb, neighbour % 4, 0));
  r.checks.push_back(rational_check("V(" + nb + ") <= 3(" + nb + ")/4",
                                    Rational::integer(v_n), "<=",
                                    Rational(static_cast<u128>(3) * neighbour, 4)));
  r.checks.push_back(eq_check("V(p) = p", v_p, p));
  const Rational bound = up ? Rational(static_cast<u128>(p) + 3, 4)
                            : Rational(p - 3, 4);
  r.checks.push_back(make_check(
      up ? "V(p) - V(p-1) >= (p+3)/4" : "V(p) - V(p+1) >= (p-3)/4",
      std::to_string(gap), ">=", bound.str(),
      gap > 0 && Rational::integer(static_cast<u128>(gap)) >= bound));
  r.auxiliary = {{"direction", up ? "up" : "down"},
                 {"p_min", dec(p_min)},
                 {"V(" + nb + ")", dec(v_n)},
                 {"gap", std::to_string(gap)}};
  return r;
}

}  // namespace vreg
