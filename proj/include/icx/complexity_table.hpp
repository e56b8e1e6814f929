#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace icx {

/// Exact integer complexities ||n|| for 1 <= n <= limit, one byte per entry.
///
/// A finished table is immutable; concurrent readers need no synchronization.
class ComplexityTable {
 public:
  ComplexityTable() = default;

  /// `values[i - 1]` holds ||i||.
  explicit ComplexityTable(std::vector<std::uint8_t> values);

  std::uint64_t limit() const noexcept { return values_.empty() ? 0 : values_.size() - 1; }
  bool contains(std::uint64_t n) const noexcept { return n >= 1 && n <= limit(); }

  /// Unchecked lookup.
  unsigned operator[](std::uint64_t n) const noexcept { return values_[n]; }

  /// Checked lookup; throws insufficient-table when n is outside [1, limit].
  unsigned at(std::uint64_t n) const;

  /// Entries for n = 1..limit, in order.
  std::span<const std::uint8_t> bytes() const noexcept {
    return std::span<const std::uint8_t>(values_).subspan(values_.empty() ? 0 : 1);
  }

  friend bool operator==(const ComplexityTable&, const ComplexityTable&) = default;

 private:
  // values_[0] is padding so that values_[n] == ||n||.
  std::vector<std::uint8_t> values_;
};

/// Exhaustive dynamic program: every factorization and every split n = a + (n - a).
ComplexityTable build_oracle(std::uint64_t limit);

/// Same table as build_oracle, computed with a forward product sieve and a
/// sum scan pruned by the lower bound ||m|| >= 3 log_3 m.
ComplexityTable build_fast(std::uint64_t limit);

/// ceil(3 log_3 n): the smallest c with 3^c >= n^3, computed exactly.
unsigned log3_lower_bound(std::uint64_t n);

/// All n <= table.limit() with ||n|| = k, ascending. Requires E(k) <= limit so
/// that the list is complete.
std::vector<std::uint64_t> numbers_with_complexity(const ComplexityTable& table, unsigned k);

}  // namespace icx
