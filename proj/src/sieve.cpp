#include "vreg/sieve.hpp"

#include <algorithm>
#include <thread>

#include "vreg/error.hpp"

namespace vreg {

SpfTable::SpfTable(std::uint64_t limit, std::uint64_t cap) : limit_(limit) {
  if (limit < 2) throw InvalidInput("spf_sieve: limit must be >= 2");
  if (limit > cap) {
    throw CapExceeded("spf_sieve: limit " + std::to_string(limit) +
                          " exceeds the sieve cap",
                      cap);
  }
  if (limit >= (std::uint64_t{1} << 32)) {
    throw CapExceeded("spf_sieve: 32-bit table entries", (std::uint64_t{1} << 32) - 1);
  }
  spf_.assign(limit + 1, 0);
  spf_[1] = 1;
  // Linear sieve: each composite i * p is written once, by its least prime p.
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t least = spf_[i];
    for (std::uint32_t p : primes_) {
      if (p > least || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

ArithProfile SpfTable::profile(std::uint64_t n) const {
  // n < 2^32, so psi(n) and sigma(n) stay far below 2^64 and the products
  // below need no overflow checks.
  ArithProfile out;
  out.n = n;
  std::uint64_t rest = n;
  while (rest > 1) {
    const std::uint64_t p = spf_[rest];
    std::uint64_t power = 1;
    std::uint64_t geometric = 1;
    unsigned e = 0;
    do {
      rest /= p;
      power *= p;
      geometric += power;
      ++e;
    } while (rest % p == 0);
    const std::uint64_t lower = power / p;
    out.v *= power - lower + 1;
    out.phi *= power - lower;
    out.psi *= lower * (p + 1);
    out.sigma *= geometric;
    if (e > 1) out.squarefree = false;
  }
  return out;
}

std::uint64_t SpfTable::v(std::uint64_t n) const {
  std::uint64_t v = 1;
  std::uint64_t rest = n;
  while (rest > 1) {
    const std::uint64_t p = spf_[rest];
    std::uint64_t power = 1;
    do {
      rest /= p;
      power *= p;
    } while (rest % p == 0);
    v *= power - power / p + 1;
  }
  return v;
}

ProfileCursor::ProfileCursor(const SpfTable& table, std::uint64_t lo,
                             std::uint64_t hi)
    : table_(&table), next_(lo), hi_(hi), done_(false) {
  if (lo < 1 || lo > hi) throw InvalidInput("profiles: need 1 <= lo <= hi");
  if (hi > table.limit()) {
    throw CapExceeded("profiles: hi = " + std::to_string(hi) +
                          " is beyond the sieve limit",
                      table.limit());
  }
}

std::optional<ArithProfile> ProfileCursor::next() {
  if (done_) return std::nullopt;
  ArithProfile p = table_->profile(next_);
  if (next_ == hi_) {
    done_ = true;
  } else {
    ++next_;
  }
  return p;
}

std::optional<std::string> check_profile(const ArithProfile& p) {
  const auto n = p.n;
  auto fail = [&](const char* what) {
    return std::optional<std::string>("n=" + std::to_string(n) + ": " + what);
  };
  if (n == 1) {
    if (p.v != 1 || p.phi != 1 || p.psi != 1 || p.sigma != 1 || !p.squarefree) {
      return fail("profile of 1 must be all ones");
    }
    return std::nullopt;
  }
  if (!(p.phi < p.v)) return fail("phi(n) < V(n) fails");
  if (!(p.v <= n)) return fail("V(n) <= n fails");
  if (!(n <= p.psi)) return fail("n <= psi(n) fails");
  if (!(n <= p.sigma)) return fail("n <= sigma(n) fails");
  if (p.squarefree != (p.v == n)) return fail("V(n) = n iff squarefree fails");
  if (n % 4 == 0 && 4 * p.v > 3 * n) return fail("V(n) <= 3n/4 for 4 | n fails");
  if (!p.squarefree && n >= 8 && p.v + 2 > n) {
    return fail("V(n) <= n - 2 for non-squarefree n >= 8 fails");
  }
  return std::nullopt;
}

namespace {

RangeScanResult scan_chunk(const SpfTable& table, std::uint64_t lo,
                           std::uint64_t hi, bool store_lists) {
  RangeScanResult r;
  r.lo = lo;
  r.hi = hi;
  r.lists_stored = store_lists;
  ArithProfile current = table.profile(lo);
  bool first = true;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const ArithProfile following = table.profile(n + 1);
    if (auto bad = check_profile(current)) r.violations.push_back(*bad);
    const auto diff = static_cast<std::int64_t>(following.v) -
                      static_cast<std::int64_t>(current.v);
    if (diff > 0) {
      ++r.a_count;
      if (store_lists) r.a_members.push_back(n);
    } else if (diff < 0) {
      ++r.b_count;
      if (store_lists) r.b_members.push_back(n);
    } else {
      r.equal_points.push_back(n);
    }
    if (first || diff > r.max_diff.diff) r.max_diff = {n, diff};
    if (first || diff < r.min_diff.diff) r.min_diff = {n, diff};
    first = false;
    current = following;
  }
  return r;
}

void merge_into(RangeScanResult& acc, RangeScanResult&& part) {
  acc.hi = part.hi;
  acc.a_count += part.a_count;
  acc.b_count += part.b_count;
  auto append = [](auto& dst, auto& src) {
    dst.insert(dst.end(), src.begin(), src.end());
  };
  append(acc.a_members, part.a_members);
  append(acc.b_members, part.b_members);
  append(acc.equal_points, part.equal_points);
  append(acc.violations, part.violations);
  // Strict comparison keeps the earlier (smaller) n on ties.
  if (part.max_diff.diff > acc.max_diff.diff) acc.max_diff = part.max_diff;
  if (part.min_diff.diff < acc.min_diff.diff) acc.min_diff = part.min_diff;
}

}  // namespace

RangeScanResult scan(const SpfTable& table, std::uint64_t lo, std::uint64_t hi,
                     const ScanOptions& options) {
  if (lo < 1 || lo > hi) throw InvalidInput("scan: need 1 <= lo <= hi");
  if (hi >= table.limit()) {
    throw CapExceeded("scan: hi + 1 = " + std::to_string(hi + 1) +
                          " is beyond the sieve limit",
                      table.limit());
  }
  const std::uint64_t count = hi - lo + 1;
  const bool store = count <= options.list_threshold;
  unsigned threads = options.threads == 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : options.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));

  std::vector<RangeScanResult> parts(threads);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = count / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t a = lo + t * chunk;
    const std::uint64_t b = t + 1 == threads ? hi : a + chunk - 1;
    if (threads == 1) {
      parts[t] = scan_chunk(table, a, b, store);
    } else {
      workers.emplace_back(
          [&, t, a, b] { parts[t] = scan_chunk(table, a, b, store); });
    }
  }
  for (auto& w : workers) w.join();

  RangeScanResult result = std::move(parts[0]);
  for (unsigned t = 1; t < threads; ++t) merge_into(result, std::move(parts[t]));
  return result;
}

void write_csv_header(std::ostream& out) {
  out << "n,V,phi,psi,sigma,squarefree\n";
}

void write_csv_row(std::ostream& out, const ArithProfile& p) {
  out << p.n << ',' << p.v << ',' << p.phi << ',' << p.psi << ',' << p.sigma
      << ',' << (p.squarefree ? 1 : 0) << '\n';
}

}  // namespace vreg
