#include "vreg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <optional>
#include <sstream>

#include "vreg/arith.hpp"
#include "vreg/density.hpp"
#include "vreg/error.hpp"
#include "vreg/serialize.hpp"
#include "vreg/sieve.hpp"
#include "vreg/suites.hpp"
#include "vreg/witness.hpp"

namespace vreg::cli {

namespace {

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidInput(std::string(what) + ": '" + text +
                       "' is not an unsigned 64-bit integer");
  }
  return value;
}

std::int64_t parse_i64(const std::string& text, const char* what) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidInput(std::string(what) + ": '" + text +
                       "' is not a 64-bit integer");
  }
  return value;
}

double parse_real(const std::string& text, const char* what) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double value = 0;
  in >> value;
  if (text.empty() || in.fail() || !in.eof()) {
    throw InvalidInput(std::string(what) + ": '" + text + "' is not a number");
  }
  return value;
}

// Accepts "2 3 5" as separate arguments as well as "2,3,5".
std::vector<std::uint64_t> parse_prime_list(const std::vector<std::string>& args) {
  std::vector<std::uint64_t> out;
  for (const auto& arg : args) {
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(parse_u64(item, "prime"));
    }
  }
  return out;
}

void print_profile_table(std::ostream& out, const SpfTable& table,
                         std::uint64_t lo, std::uint64_t hi) {
  const int w = static_cast<int>(std::to_string(hi).size()) + 2;
  const int ws = w + 2;  // sigma and psi run a little wider than n
  out << std::setw(w) << "n" << std::setw(w) << "V" << std::setw(w) << "phi"
      << std::setw(ws) << "psi" << std::setw(ws) << "sigma" << "  squarefree\n";
  for_each_profile(table, lo, hi, [&](const ArithProfile& p) {
    out << std::setw(w) << p.n << std::setw(w) << p.v << std::setw(w) << p.phi
        << std::setw(ws) << p.psi << std::setw(ws) << p.sigma << "  "
        << (p.squarefree ? "yes" : "no") << '\n';
  });
}

void print_scan_text(std::ostream& out, const RangeScanResult& r) {
  out << "interval        [" << r.lo << ", " << r.hi << "]\n"
      << "A (V(n+1)>V(n)) " << r.a_count << '\n'
      << "B (V(n+1)<V(n)) " << r.b_count << '\n'
      << "equal points    " << r.equal_points.size();
  if (!r.equal_points.empty() && r.equal_points.size() <= 20) {
    out << " :";
    for (auto n : r.equal_points) out << ' ' << n;
  }
  out << '\n'
      << "max V(n+1)-V(n) " << r.max_diff.diff << " at n=" << r.max_diff.n << '\n'
      << "min V(n+1)-V(n) " << r.min_diff.diff << " at n=" << r.min_diff.n << '\n'
      << "violations      " << r.violations.size() << '\n';
  for (const auto& v : r.violations) out << "  " << v << '\n';
}

WitnessReport run_witness(const std::string& kind_name,
                          const std::vector<std::string>& args,
                          std::uint64_t max_steps) {
  const WitnessKind kind = parse_witness_kind(kind_name);
  auto single = [&](const char* what) {
    if (args.size() != 1) {
      throw InvalidInput(kind_name + " takes exactly one argument (" + what + ")");
    }
    return parse_u64(args.front(), what);
  };
  switch (kind) {
    case WitnessKind::kProp1Ascending:
      return prop1_ascending_witness(parse_prime_list(args), max_steps);
    case WitnessKind::kProp1Descending:
      return prop1_descending_witness(parse_prime_list(args), max_steps);
    case WitnessKind::kProp2Liminf:
      return linnik_witness_liminf(single("x"), max_steps);
    case WitnessKind::kProp2Limsup:
      return linnik_witness_limsup(single("x"), max_steps);
    case WitnessKind::kProp3Up:
      return prop3_gap_witness(GapDirection::kUp, single("p_min"), max_steps);
    case WitnessKind::kProp3Down:
      return prop3_gap_witness(GapDirection::kDown, single("p_min"), max_steps);
  }
  throw InvalidInput("unknown witness kind");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Regular integers modulo n: V(n), its companions, and checks",
               "vreg"};
  app.require_subcommand(1);

  std::string n_text;
  auto* v_cmd = app.add_subcommand("v", "Print V(N), the number of regular residues");
  v_cmd->add_option("N", n_text, "positive integer < 2^64")->required();

  std::string cap_text = std::to_string(kDefaultRegSetCap);
  auto* regs_cmd = app.add_subcommand("regs", "Print Reg_N, the regular a in [1, N]");
  regs_cmd->add_option("N", n_text, "positive integer")->required();
  regs_cmd->add_option("--cap", cap_text, "enumeration cap");

  std::string lo_text, hi_text;
  bool csv = false;
  auto* profile_cmd = app.add_subcommand("profile", "Stream V, phi, psi, sigma over [LO, HI]");
  profile_cmd->add_option("LO", lo_text)->required();
  profile_cmd->add_option("HI", hi_text)->required();
  profile_cmd->add_flag("--csv", csv, "CSV output");

  bool json = false;
  std::string threads_text = "1";
  auto* scan_cmd = app.add_subcommand("scan", "Membership in A and B, and V(n+1)-V(n) extrema over [LO, HI]");
  scan_cmd->add_option("LO", lo_text)->required();
  scan_cmd->add_option("HI", hi_text)->required();
  scan_cmd->add_flag("--json", json, "JSON output");
  scan_cmd->add_option("--threads", threads_text, "worker threads (0 = all cores)");

  std::string kind_text;
  std::vector<std::string> witness_args;
  std::string max_steps_text = std::to_string(kDefaultMaxSteps);
  auto* witness_cmd = app.add_subcommand(
      "witness",
      "Search and verify a witness. KIND: prop1_ascending|prop1_descending "
      "PRIMES..., prop2_liminf|prop2_limsup X, prop3_up|prop3_down P_MIN, "
      "dirichlet RESIDUE MODULUS");
  witness_cmd->add_option("KIND", kind_text)->required();
  witness_cmd->add_option("ARGS", witness_args)->required();
  witness_cmd->add_option("--max-steps", max_steps_text, "progression terms to try");
  witness_cmd->add_flag("--json", json, "JSON output (always on)");

  std::string delta_text;
  std::string prime_limit_text = "1000000";
  auto* density_cmd = app.add_subcommand(
      "density", "Greedy prime subseries approaching DELTA. KIND: psi_over_v|v_over_phi");
  density_cmd->add_option("KIND", kind_text)->required();
  density_cmd->add_option("DELTA", delta_text)->required();
  density_cmd->add_option("--prime-limit", prime_limit_text, "largest prime considered");
  density_cmd->add_flag("--json", json, "JSON output (always on)");

  std::string suite_text;
  std::string limit_text;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite (or 'all')");
  verify_cmd->add_option("SUITE", suite_text)->required();
  verify_cmd->add_option("--limit", limit_text, "override the suite's size parameter");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInvalidInput;
  }

  try {
    if (*v_cmd) {
      out << v_of(factorize(parse_u64(n_text, "N"))) << '\n';
    } else if (*regs_cmd) {
      const auto n = parse_u64(n_text, "N");
      const auto set = reg_set(n, parse_u64(cap_text, "--cap"));
      for (std::size_t i = 0; i < set.size(); ++i) {
        out << (i ? " " : "") << set[i];
      }
      out << '\n';
    } else if (*profile_cmd) {
      const auto lo = parse_u64(lo_text, "LO");
      const auto hi = parse_u64(hi_text, "HI");
      if (lo < 1 || lo > hi) throw InvalidInput("profile: need 1 <= LO <= HI");
      const SpfTable table(std::max<std::uint64_t>(hi, 2));
      if (csv) {
        write_csv_header(out);
        for_each_profile(table, lo, hi,
                         [&](const ArithProfile& p) { write_csv_row(out, p); });
      } else {
        print_profile_table(out, table, lo, hi);
      }
    } else if (*scan_cmd) {
      const auto lo = parse_u64(lo_text, "LO");
      const auto hi = parse_u64(hi_text, "HI");
      ScanOptions options;
      options.threads = static_cast<unsigned>(parse_u64(threads_text, "--threads"));
      if (lo < 1 || lo > hi) throw InvalidInput("scan: need 1 <= LO <= HI");
      if (hi >= kDefaultSieveCap) {
        throw CapExceeded("scan: HI + 1 exceeds the sieve cap", kDefaultSieveCap);
      }
      const SpfTable table(hi + 1);
      const auto result = scan(table, lo, hi, options);
      if (json) {
        out << to_json(result) << '\n';
      } else {
        print_scan_text(out, result);
      }
      if (!result.violations.empty()) return kFailure;
    } else if (*witness_cmd) {
      const auto max_steps = parse_u64(max_steps_text, "--max-steps");
      if (kind_text == "dirichlet") {
        if (witness_args.size() != 2) {
          throw InvalidInput("dirichlet takes RESIDUE MODULUS");
        }
        const auto modulus = parse_u64(witness_args[1], "MODULUS");
        const auto residue =
            normalize_residue(parse_i64(witness_args[0], "RESIDUE"), modulus);
        const auto hit = dirichlet_prime(residue, modulus, max_steps);
        out << "{\"prime\":\"" << hit.prime << "\",\"residue\":\"" << residue
            << "\",\"modulus\":\"" << modulus << "\",\"steps_tried\":\""
            << hit.steps_tried << "\"}\n";
      } else {
        const auto report = run_witness(kind_text, witness_args, max_steps);
        out << to_json(report) << '\n';
        if (!report.all_checks_pass()) return kFailure;
      }
    } else if (*density_cmd) {
      const auto kind = parse_density_kind(kind_text);
      const auto delta = parse_real(delta_text, "DELTA");
      const auto limit = parse_u64(prime_limit_text, "--prime-limit");
      out << to_json(greedy_subseries(kind, delta, limit)) << '\n';
    } else if (*verify_cmd) {
      std::optional<std::uint64_t> limit;
      if (!limit_text.empty()) limit = parse_u64(limit_text, "--limit");
      std::vector<std::string_view> names;
      if (suite_text == "all") {
        names = suite_names();
      } else {
        if (std::find(suite_names().begin(), suite_names().end(), suite_text) ==
            suite_names().end()) {
          throw InvalidInput("unknown suite '" + suite_text + "'");
        }
        names.push_back(suite_text);
      }
      bool all_ok = true;
      for (auto name : names) {
        const auto r = run_suite(name, limit);
        out << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " passed=" << r.passed
            << " failed=" << r.failed << '\n';
        for (const auto& f : r.failures) out << "  " << f << '\n';
        all_ok = all_ok && r.ok();
      }
      return all_ok ? kOk : kFailure;
    }
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << '\n';
    return kFailure;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ArithmeticOverflow& e) {
    err << "out of range: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace vreg::cli
