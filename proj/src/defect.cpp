#include "icx/defect.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "icx/error.hpp"

namespace icx {

namespace {

// Largest j with m * 3^j <= n; requires m <= n.
unsigned floor_log3_scaled(std::uint64_t n, std::uint64_t m) {
  unsigned j = 0;
  for (std::uint64_t p = m; p <= n / 3; p *= 3) ++j;
  return j;
}

long double log3_of(const Natural& n) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return (std::log(static_cast<long double>(mant)) + exp2 * std::log(2.0L)) / std::log(3.0L);
}

}  // namespace

Natural max_with_complexity(unsigned k) {
  if (k == 0) throw Error(ErrorKind::undefined_argument, "E(0) is undefined");
  if (k == 1) return 1;
  switch (k % 3) {
    case 0: return pow3(k / 3);
    case 1: return 4 * pow3((k - 4) / 3);
    default: return 2 * pow3((k - 2) / 3);
  }
}

std::optional<std::uint64_t> max_with_complexity_u64(unsigned k) {
  const Natural e = max_with_complexity(k);
  if (!fits_u64(e)) return std::nullopt;
  return to_u64(e);
}

unsigned complexity_floor(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::undefined_argument, "L(0) is undefined");
  unsigned best = 1;
  if (n >= 3) best = std::max(best, 3 * floor_log3_scaled(n, 1));
  if (n >= 2) best = std::max(best, 3 * floor_log3_scaled(n, 2) + 2);
  if (n >= 4) best = std::max(best, 3 * floor_log3_scaled(n, 4) + 4);
  return best;
}

unsigned integer_defect(std::uint64_t n, const ComplexityTable& table) {
  return table.at(n) - complexity_floor(n);
}

unsigned count_selfridge_values_above(std::uint64_t n, const ComplexityTable& table) {
  const unsigned c = table.at(n);
  unsigned count = 0;
  for (unsigned k = 1; k <= c; ++k) {
    const auto e = max_with_complexity_u64(k);
    if (!e || *e > n) ++count;
  }
  return count;
}

bool interpolation_holds(std::uint64_t n, const ComplexityTable& table) {
  return count_selfridge_values_above(n, table) == integer_defect(n, table);
}

std::strong_ordering compare_defects(const Defect& d1, const Defect& d2) {
  Natural lhs = d2.base * d2.base * d2.base;
  Natural rhs = d1.base * d1.base * d1.base;
  if (d1.complexity >= d2.complexity) {
    mul_pow3(lhs, d1.complexity - d2.complexity);
  } else {
    mul_pow3(rhs, d2.complexity - d1.complexity);
  }
  const int s = cmp(lhs, rhs);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

long double approximate(const Defect& d) {
  return static_cast<long double>(d.complexity) - 3.0L * log3_of(d.base);
}

Defect defect_of(std::uint64_t n, const ComplexityTable& table) {
  return Defect(table.at(n), n);
}

Threshold threshold(unsigned residue, unsigned k) {
  return Threshold{k, (k % 3 + 3 - residue % 3) % 3};
}

long double approximate(const Threshold& t) {
  const long double delta2 = 2.0L - 3.0L * std::log(2.0L) / std::log(3.0L);
  return static_cast<long double>(t.k) + t.m * delta2;
}

ThresholdOrder compare_defect_threshold(const Defect& d, const Threshold& t) {
  // c - 3 log3 n <= k + m (2 - 3 log3 2)  <=>  3^c 2^{3m} <= n^3 3^{k+2m}
  Natural lhs = 1;
  lhs <<= 3 * t.m;
  Natural rhs = d.base * d.base * d.base;
  const unsigned e = t.k + 2 * t.m;
  if (d.complexity >= e) {
    mul_pow3(lhs, d.complexity - e);
  } else {
    mul_pow3(rhs, e - d.complexity);
  }
  return lhs <= rhs ? ThresholdOrder::less_or_equal : ThresholdOrder::greater;
}

unsigned integer_defect_from(const Defect& d) {
  if (d.base == 1) {
    throw Error(ErrorKind::excluded_case, "the defect of 1 has no integer-defect threshold");
  }
  if (sgn(d.base) <= 0) throw Error(ErrorKind::invalid_argument, "defect base must be positive");
  const unsigned residue = d.complexity % 3;
  for (unsigned k = 0; k <= d.complexity; ++k) {
    if (within(d, threshold(residue, k))) return k;
  }
  throw Error(ErrorKind::invalid_argument,
              "no threshold k <= " + std::to_string(d.complexity) + " bounds defect (" +
                  std::to_string(d.complexity) + ", " + d.base.get_str() + ")");
}

Rational ratio_of(std::uint64_t n, const ComplexityTable& table) {
  Rational r(to_natural(n), max_with_complexity(table.at(n)));
  r.canonicalize();
  return r;
}

}  // namespace icx
