#pragma once

#include <cstdint>
#include <vector>

#include "icx/complexity_table.hpp"
#include "icx/defect.hpp"

namespace icx {

/// Evidence about the 3-power orbit n, 3n, ..., 3^horizon n.
struct StabilityReport {
  std::uint64_t n = 0;
  unsigned horizon = 0;
  /// complexities[k] = ||3^k n||
  std::vector<unsigned> complexities;
  /// min over k <= horizon of ||3^k n|| - 3k; equals the stable complexity when certified.
  unsigned stable_complexity = 0;
  /// Smallest k attaining stable_complexity.
  unsigned first_stable_k = 0;
  /// True when the estimate is provably the stable complexity: either the
  /// minimizing multiple 3^k n > 1 has integer defect at most 2 (and is
  /// therefore stable), or the estimated stable defect is below 1 so no
  /// further integer drop is possible.
  bool certified = false;
};

template <class T>
struct Certified {
  T value;
  bool certified;
};

/// Largest K with 3^K n <= table.limit().
unsigned default_horizon(std::uint64_t n, const ComplexityTable& table);

StabilityReport probe(std::uint64_t n, unsigned horizon, const ComplexityTable& table);
inline StabilityReport probe(std::uint64_t n, const ComplexityTable& table) {
  return probe(n, default_horizon(n, table), table);
}

/// min over k <= horizon of D(3^k n).
Certified<unsigned> stable_integer_defect(std::uint64_t n, unsigned horizon, const ComplexityTable& table);

/// Defect{stable complexity estimate, n}.
Certified<Defect> stable_defect(std::uint64_t n, unsigned horizon, const ComplexityTable& table);

}  // namespace icx
