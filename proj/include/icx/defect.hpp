#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "icx/complexity_table.hpp"
#include "icx/natural.hpp"

namespace icx {

// ---------------------------------------------------------------------------
// Selfridge bounds
// ---------------------------------------------------------------------------

/// Largest number expressible with k ones: 1, 3^{k/3}, 4*3^{(k-4)/3} or
/// 2*3^{(k-2)/3} according to k mod 3. Throws undefined-argument for k = 0.
Natural max_with_complexity(unsigned k);

/// max_with_complexity(k) when it fits in 64 bits.
std::optional<std::uint64_t> max_with_complexity_u64(unsigned k);

/// Largest k with max_with_complexity(k) <= n (n >= 1). This is an integer
/// lower bound for ||n||.
unsigned complexity_floor(std::uint64_t n);

/// ||n|| - complexity_floor(n).
unsigned integer_defect(std::uint64_t n, const ComplexityTable& table);

/// Number of k with n < max_with_complexity(k) <= max_with_complexity(||n||).
unsigned count_selfridge_values_above(std::uint64_t n, const ComplexityTable& table);

/// True iff count_selfridge_values_above(n) equals integer_defect(n).
bool interpolation_holds(std::uint64_t n, const ComplexityTable& table);

// ---------------------------------------------------------------------------
// Defects
// ---------------------------------------------------------------------------

/// The real number complexity - 3 log_3 base, kept symbolically. Ordering and
/// equality are decided by big-integer comparison, never by rounding.
struct Defect {
  unsigned complexity = 0;
  Natural base = 1;

  Defect() = default;
  Defect(unsigned c, Natural b) : complexity(c), base(std::move(b)) {}
  Defect(unsigned c, std::uint64_t b) : complexity(c), base(to_natural(b)) {}
};

/// Sign of d1 - d2, via 3^{c1} * n2^3 against 3^{c2} * n1^3.
std::strong_ordering compare_defects(const Defect& d1, const Defect& d2);

inline bool same_value(const Defect& d1, const Defect& d2) {
  return compare_defects(d1, d2) == std::strong_ordering::equal;
}

/// Decimal approximation, for display only.
long double approximate(const Defect& d);

/// Defect{||n||, n}.
Defect defect_of(std::uint64_t n, const ComplexityTable& table);

/// k + m * delta(2) where delta(2) = 2 - 3 log_3 2 and m is in {0, 1, 2}.
struct Threshold {
  unsigned k = 0;
  unsigned m = 0;
};

/// The changeover point for residue class a: m = (k - a) mod 3.
Threshold threshold(unsigned residue, unsigned k);

long double approximate(const Threshold& t);

enum class ThresholdOrder { less_or_equal, greater };

/// Decides d <= t exactly: 3^c * 2^{3m} <= n^3 * 3^{k + 2m}.
ThresholdOrder compare_defect_threshold(const Defect& d, const Threshold& t);

inline bool within(const Defect& d, const Threshold& t) {
  return compare_defect_threshold(d, t) == ThresholdOrder::less_or_equal;
}

/// Smallest k with d <= threshold(d.complexity mod 3, k). Throws excluded-case
/// for base 1 and invalid-argument if no k <= complexity qualifies.
unsigned integer_defect_from(const Defect& d);

/// n / max_with_complexity(||n||), in lowest terms.
Rational ratio_of(std::uint64_t n, const ComplexityTable& table);

}  // namespace icx
