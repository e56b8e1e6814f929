// Runs the twelve acceptance criteria and prints one PASS/FAIL line for each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "icx/cache.hpp"
#include "icx/complexity_table.hpp"
#include "icx/defect.hpp"
#include "icx/low_defect_poly.hpp"
#include "icx/spectrum_tables.hpp"
#include "icx/spectrum_verify.hpp"
#include "icx/stability.hpp"

using namespace icx;

namespace {

constexpr std::uint64_t kOracleLimit = 531441;     // E(36)
constexpr std::uint64_t kWideLimit = 14348907;     // E(45), covers 3 * 4721323 = 14163969
constexpr std::uint64_t kSweepLimit = 1000000;
constexpr std::uint64_t kSmallSweep = 100000;
constexpr std::uint64_t kGridValueCap = 1000000;

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::ostream&)> run;
};

const ComplexityTable& oracle_table() {
  static const ComplexityTable t = build_oracle(kOracleLimit);
  return t;
}

const ComplexityTable& wide_table() {
  static const ComplexityTable t = build_fast(kWideLimit);
  return t;
}

bool report_ok(const VerificationReport& r, std::ostream& log) {
  log << "    " << r.suite() << ": " << r.checks() << " checks, " << r.violation_count() << " violations\n";
  if (!r.passed()) log << "    " << r.to_json().dump().substr(0, 2000) << "\n";
  return r.passed();
}

std::uint64_t scan_largest(const ComplexityTable& t, unsigned k) {
  for (std::uint64_t n = t.limit(); n >= 1; --n)
    if (t[n] <= k) return n;
  return 0;
}

bool selfridge(std::ostream& log) {
  bool ok = true;
  // Anything above 3^{k/3} has complexity above k, so a scan of a table reaching
  // 3^{k/3} finds the true maximum.
  const auto& oracle = oracle_table();
  for (unsigned k = 1; k <= 36; ++k) {
    if (to_natural(scan_largest(oracle, k)) != max_with_complexity(k)) {
      log << "    k=" << k << " oracle scan disagrees\n";
      ok = false;
    }
  }
  const auto& wide = wide_table();
  for (std::uint64_t n = 1; n <= oracle.limit(); ++n)
    if (wide[n] != oracle[n]) {
      log << "    fast table differs from oracle at " << n << "\n";
      return false;
    }
  for (unsigned k = 37; k <= 45; ++k) {
    if (to_natural(scan_largest(wide, k)) != max_with_complexity(k)) {
      log << "    k=" << k << " wide scan disagrees\n";
      ok = false;
    }
  }
  for (unsigned k = 46; k <= 60; ++k) {
    Natural e = max_with_complexity(k);
    Natural cube = e * e * e;
    if (e != 3 * max_with_complexity(k - 3) || cube > pow3(k) || e <= max_with_complexity(k - 1)) {
      log << "    k=" << k << " recurrence check failed\n";
      ok = false;
    }
  }
  log << "    brute-force scan k=1..45 (oracle to 531441, fast to 14348907); k=46..60 via E(k)=3E(k-3)\n";
  return ok;
}

bool constants(std::ostream& log) {
  const auto& t = oracle_table();
  bool ok = t[11] == 8 && t[107] == 16 && t[321] == 18 && t[683] == 22 && t[2049] == 23;
  ok = ok && integer_defect(56, t) == 1 &&
       compare_defects(defect_of(56, t), Defect(1, 1u)) == std::strong_ordering::greater;
  const auto& w = wide_table();
  const std::uint64_t n = 4721323;
  log << "    ||4721323|| = " << w[n] << ", ||3*4721323|| = " << w[3 * n] << "\n";
  return ok && w[3 * n] + 1 == w[n];
}

bool rawsthorne(std::ostream& log) {
  const auto& t = oracle_table();
  bool ok = true;
  for (unsigned k = 8; k <= 36; ++k) {
    std::uint64_t second = top_rank(k, 1, t);
    Rational expected = Rational(8, 9) * Rational(max_with_complexity(k));
    if (expected.get_den() != 1 || to_natural(second) != expected.get_num() || t[second] != k) {
      log << "    k=" << k << " second largest " << second << "\n";
      ok = false;
    }
  }
  return ok;
}

bool stability_integers(std::ostream& log) {
  const auto& t = wide_table();
  bool ok = true;
  struct Case {
    std::uint64_t n;
    unsigned horizon, d, dst;
  };
  for (Case c : {Case{107, 2, 3, 2}, Case{683, 1, 4, 2}}) {
    unsigned d = integer_defect(c.n, t);
    auto r = probe(c.n, c.horizon, t);
    auto dst = stable_integer_defect(c.n, c.horizon, t);
    auto full = stable_integer_defect(c.n, default_horizon(c.n, t), t);
    bool good = d == c.d && dst.value == c.dst && dst.certified && r.certified;
    log << "    n=" << c.n << ": D=" << d << " (expected " << c.d << "), D_st=" << dst.value << " (expected "
        << c.dst << "), certified=" << (dst.certified ? "yes" : "no") << ", D_st over the full table horizon "
        << full.value << "\n";
    ok = ok && good;
  }
  std::size_t mismatches = 0;
  for (std::uint64_t n = 2; n <= kSmallSweep; ++n) {
    unsigned d = integer_defect(n, t);
    unsigned dst = stable_integer_defect(n, default_horizon(n, t), t).value;
    if ((d == 0) != (dst == 0) || (d == 1) != (dst == 1)) ++mismatches;
  }
  log << "    D=0 and D=1 sweeps to " << kSmallSweep << ": " << mismatches << " mismatches\n";
  return ok && mismatches == 0;
}

bool low_defect(std::ostream& log) {
  const auto& t = wide_table();
  std::size_t points = 0;
  bool ok = true;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned k = 1; k <= 4; ++k) {
      auto f = witness_family(a, k, t);
      Threshold tk = threshold(a, k);
      Defect df = poly_defect(f);
      std::uint64_t m = to_u64(f.leading_coefficient());
      if (!same_value(df, Defect(tk.k + 2 * tk.m, std::uint64_t{1} << tk.m)) || f.base_complexity() != t[m] + k ||
          f.degree() != k) {
        log << "    witness (" << a << "," << k << ") ceiling or complexity wrong\n";
        ok = false;
      }
      // every coefficient is positive, so the value grows in each exponent and
      // the walk can stop a coordinate as soon as the cap is passed
      std::vector<unsigned> e(k + 1, 0);
      std::function<void(unsigned)> walk = [&](unsigned i) {
        if (i == e.size()) {
          Natural v = f.evaluate_augmented(e);
          ++points;
          unsigned sum = 0;
          for (unsigned x : e) sum += x;
          if (t[to_u64(v)] > f.base_complexity() + 3 * sum) {
            log << "    upper bound fails at value " << v.get_str() << "\n";
            ok = false;
          }
          std::vector<unsigned> inner(e.begin(), e.end() - 1);
          Defect here = defect_at(f, inner);
          if (compare_defects(here, df) != std::strong_ordering::less) {
            log << "    defect ceiling not strict for (" << a << "," << k << ")\n";
            ok = false;
          }
          for (unsigned j = 0; j < k; ++j) {
            auto up = inner;
            ++up[j];
            if (compare_defects(defect_at(f, up), here) != std::strong_ordering::greater) {
              log << "    monotonicity fails for (" << a << "," << k << ")\n";
              ok = false;
            }
          }
          return;
        }
        for (e[i] = 0; f.evaluate_augmented(e) <= kGridValueCap; ++e[i]) walk(i + 1);
        e[i] = 0;
      };
      walk(0);
    }
  log << "    " << points << " grid points\n";
  return ok && points > 0;
}

bool initial_segments(std::ostream& log, const ComplexityTable& t) {
  bool ok = report_ok(verify_threshold_equivalence(kSweepLimit, t), log);
  for (unsigned a = 0; a < 3; ++a) {
    auto r = verify_initial_segment(a, kSweepLimit, t);
    ok = report_ok(r, log) && ok;
  }
  return ok;
}

bool oracle_equivalence(std::ostream& log) {
  bool ok = build_fast(kSmallSweep) == build_oracle(kSmallSweep);
  auto dir = std::filesystem::temp_directory_path() / "icx_acceptance";
  std::filesystem::create_directories(dir);
  auto path = dir / "table.icx";
  const auto& t = oracle_table();
  write_cache(path, t);
  auto back = read_cache(path);
  bool same = back == t && encode_cache(back) == encode_cache(t);
  log << "    fast == oracle on [1, " << kSmallSweep << "]: " << (ok ? "yes" : "no")
      << "; cache round trip: " << (same ? "identical" : "differs") << "\n";
  std::filesystem::remove(path);
  return ok && same;
}

}  // namespace

int main() {
  const ComplexityTable* sweep = nullptr;
  auto sweep_table = [&]() -> const ComplexityTable& {
    if (!sweep) sweep = &wide_table();
    return *sweep;
  };

  std::vector<Criterion> criteria = {
      {1, "Selfridge maxima E(k) for k=1..60", selfridge},
      {2, "complexity constants and the 4721323 drop", constants},
      {3, "second largest of complexity <= k is 8/9 E(k) for 8 <= k <= 36", rawsthorne},
      {4, "ranked maxima tables for k <= 30",
       [](std::ostream& log) { return report_ok(verify_tables(30, oracle_table()), log); }},
      {5, "D <= 1 classification to 10^6",
       [&](std::ostream& log) { return report_ok(verify_classification(kSweepLimit, sweep_table()), log); }},
      {6, "integer defect from exact thresholds to 10^6",
       [&](std::ostream& log) { return report_ok(verify_threshold_equivalence(kSweepLimit, sweep_table()), log); }},
      {7, "counting form of D to 10^5",
       [&](std::ostream& log) { return report_ok(verify_interpolation(kSmallSweep, sweep_table()), log); }},
      {8, "defects up to 2 delta(2) to 10^6",
       [&](std::ostream& log) { return report_ok(verify_smallest_defects(kSweepLimit, sweep_table()), log); }},
      {9, "stable integer defects of 107 and 683; D=0, D=1 preserved", stability_integers},
      {10, "witness family bounds, monotonicity and ceilings", low_defect},
      {11, "initial segments below t_a(1) and threshold equivalence",
       [&](std::ostream& log) { return initial_segments(log, sweep_table()); }},
      {12, "fast sieve equals oracle; cache round trip", oracle_equivalence},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    std::cout << log.str() << std::flush;
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
