#include "icx/stability.hpp"

#include <algorithm>
#include <string>

#include "icx/error.hpp"

namespace icx {

namespace {

void require_orbit(std::uint64_t n, unsigned horizon, const ComplexityTable& table) {
  std::uint64_t m = n;
  for (unsigned k = 0; k < horizon && m != 0; ++k) {
    m = m > table.limit() / 3 ? 0 : m * 3;
  }
  if (n == 0 || m == 0 || !table.contains(m)) {
    throw Error(ErrorKind::insufficient_table, "3^" + std::to_string(horizon) + " * " + std::to_string(n) +
                                                   " exceeds table limit " + std::to_string(table.limit()));
  }
}

}  // namespace

unsigned default_horizon(std::uint64_t n, const ComplexityTable& table) {
  if (!table.contains(n)) {
    throw Error(ErrorKind::insufficient_table, std::to_string(n) + " is outside the table");
  }
  unsigned k = 0;
  for (std::uint64_t m = n; m <= table.limit() / 3; m *= 3) ++k;
  return k;
}

StabilityReport probe(std::uint64_t n, unsigned horizon, const ComplexityTable& table) {
  require_orbit(n, horizon, table);
  StabilityReport report;
  report.n = n;
  report.horizon = horizon;
  report.complexities.reserve(horizon + 1);

  std::uint64_t m = n;
  std::uint64_t argmin_value = n;
  report.stable_complexity = table[n];
  for (unsigned k = 0; k <= horizon; ++k, m *= 3) {
    const unsigned c = table[m];
    report.complexities.push_back(c);
    if (c - 3 * k < report.stable_complexity) {  // ||3^k n|| >= 3k always
      report.stable_complexity = c - 3 * k;
      report.first_stable_k = k;
      argmin_value = m;
    }
  }

  const bool small_integer_defect = argmin_value > 1 && integer_defect(argmin_value, table) <= 2;
  const bool below_one = compare_defects(Defect(report.stable_complexity, n), Defect(1, std::uint64_t{1})) ==
                         std::strong_ordering::less;
  report.certified = small_integer_defect || below_one;
  return report;
}

Certified<unsigned> stable_integer_defect(std::uint64_t n, unsigned horizon, const ComplexityTable& table) {
  const StabilityReport report = probe(n, horizon, table);
  unsigned best = integer_defect(n, table);
  std::uint64_t m = n;
  for (unsigned k = 1; k <= horizon; ++k) {
    m *= 3;
    best = std::min(best, integer_defect(m, table));
  }
  return {best, report.certified};
}

Certified<Defect> stable_defect(std::uint64_t n, unsigned horizon, const ComplexityTable& table) {
  const StabilityReport report = probe(n, horizon, table);
  return {Defect(report.stable_complexity, n), report.certified};
}

}  // namespace icx
