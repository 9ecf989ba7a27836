#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vreg/arith.hpp"

namespace vreg {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

/// Smallest-prime-factor table over [0, limit], built by a linear sieve.
/// Immutable after construction; safe to share between threads.
class SpfTable {
 public:
  /// Throws InvalidInput if limit < 2, CapExceeded if limit > cap.
  explicit SpfTable(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

  std::uint64_t limit() const noexcept { return limit_; }

  /// Least prime dividing n, for 2 <= n <= limit.
  std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }
  std::uint32_t operator[](std::uint64_t n) const { return spf_[n]; }

  bool is_prime(std::uint64_t n) const { return n >= 2 && spf_[n] == n; }

  /// Every prime <= limit, ascending.
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  /// Profile of n derived by walking the SPF chain. 1 <= n <= limit.
  ArithProfile profile(std::uint64_t n) const;
  std::uint64_t v(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  // 32-bit entries: the cap keeps limit below 2^32.
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Ordered, pull-based stream of profiles over [lo, hi]; holds O(1) state.
class ProfileCursor {
 public:
  /// Throws InvalidInput unless 1 <= lo <= hi <= table.limit().
  ProfileCursor(const SpfTable& table, std::uint64_t lo, std::uint64_t hi);

  std::optional<ArithProfile> next();

 private:
  const SpfTable* table_;
  std::uint64_t next_;
  std::uint64_t hi_;
  bool done_;
};

inline ProfileCursor batch_profiles(const SpfTable& table, std::uint64_t lo,
                                    std::uint64_t hi) {
  return ProfileCursor(table, lo, hi);
}

template <typename Fn>
void for_each_profile(const SpfTable& table, std::uint64_t lo, std::uint64_t hi,
                      Fn&& fn) {
  ProfileCursor cursor(table, lo, hi);
  while (auto p = cursor.next()) fn(*p);
}

struct DiffPoint {
  std::uint64_t n = 0;
  std::int64_t diff = 0;  // V(n+1) - V(n)

  friend bool operator==(const DiffPoint&, const DiffPoint&) = default;
};

struct ScanOptions {
  /// Membership lists are kept only when hi - lo + 1 <= this threshold.
  std::uint64_t list_threshold = 1'000'000;
  /// Worker threads over disjoint sub-intervals; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// Sets A = {n : V(n+1) > V(n)} and B = {n : V(n+1) < V(n)} restricted to
/// [lo, hi], plus difference extrema and any profile-identity failures.
struct RangeScanResult {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t a_count = 0;
  std::uint64_t b_count = 0;
  bool lists_stored = false;
  std::vector<std::uint64_t> a_members;  // empty unless lists_stored
  std::vector<std::uint64_t> b_members;
  std::vector<std::uint64_t> equal_points;
  DiffPoint max_diff;
  DiffPoint min_diff;
  std::vector<std::string> violations;

  bool trichotomy_holds() const noexcept {
    return a_count + b_count + equal_points.size() == hi - lo + 1;
  }

  friend bool operator==(const RangeScanResult&,
                         const RangeScanResult&) = default;
};

/// Requires 1 <= lo <= hi and hi + 1 <= table.limit(). Extremum ties go to
/// the smaller n, so results are independent of options.threads.
RangeScanResult scan(const SpfTable& table, std::uint64_t lo, std::uint64_t hi,
                     const ScanOptions& options = {});

/// The profile invariants that must hold for every n; returns a description of
/// the first failure, if any.
std::optional<std::string> check_profile(const ArithProfile& p);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ArithProfile& p);

}  // namespace vreg
