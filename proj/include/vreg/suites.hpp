#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vreg {

/// Outcome of one named invariant suite: every individual case is counted.
struct SuiteResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  // first few failure messages

  bool ok() const noexcept { return failed == 0 && passed > 0; }
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string_view>& suite_names();

/// Runs one suite. `limit` overrides the suite's default size parameter:
///   oracle          n <= limit (3000), brute-force regularity count
///   identities      n in [2, limit] (10^6), sieve profile identities
///   multiplicative  m, n <= limit (200), (sub)multiplicativity grid
///   sets            scan of [1, limit] (10^5), sets A and B
///   gaps            scan of [1, limit) (10^6) and gap witnesses
///   witness         witness searches, max steps = limit (10^6)
///   density         greedy targets, prime limit = limit (10^6)
/// Throws InvalidInput for an unknown name.
SuiteResult run_suite(std::string_view name,
                      std::optional<std::uint64_t> limit = std::nullopt);

/// Brute-force count of a in [1, n] with a^2 x = a (mod n) for some x in
/// [0, n). Independent of the gcd criterion used by is_regular.
std::uint64_t brute_force_regular_count(std::uint64_t n);

}  // namespace vreg
