#pragma once

#include <cstdint>
#include <vector>

#include "icx/complexity_table.hpp"
#include "icx/defect.hpp"
#include "icx/report.hpp"
#include "icx/spectrum_tables.hpp"

namespace icx {

/// The r-th largest n (0-indexed) with ||n|| <= k, by descending scan from E(k).
/// Throws insufficient-table when E(k) > limit and rank-exhausted when fewer
/// than r + 1 such n exist.
std::uint64_t top_rank(unsigned k, unsigned r, const ComplexityTable& table);

/// The `count` largest n with ||n|| <= k, descending.
std::vector<std::uint64_t> largest_within(unsigned k, std::size_t count, const ComplexityTable& table);

/// For every 2 <= k <= k_max and every row with K <= k: the r-th largest number
/// of complexity at most k is h * E(k), has complexity exactly k, and exceeds E(k - 1).
VerificationReport verify_tables(unsigned k_max, const ComplexityTable& table);

// ---------------------------------------------------------------------------
// Numbers of integer defect at most 1
// ---------------------------------------------------------------------------

struct ClassifiedForm {
  enum class Kind { one, pow2_pow3, step_form };
  Kind kind = Kind::one;
  /// pow2_pow3: (a, k) for 2^a 3^k; step_form: (a, b, l, k) for 2^a (2^b 3^l + 1) 3^k.
  unsigned a = 0, b = 0, l = 0, k = 0;
  unsigned claimed_complexity = 1;
};

struct ClassifiedNumber {
  std::uint64_t n = 0;
  unsigned claimed_complexity = 0;
  std::vector<ClassifiedForm> forms;  // every form producing n
};

/// All n <= limit of the forms 1, 2^a 3^k (a <= 10), 2^a (2^b 3^l + 1) 3^k
/// (a + b <= 2), ascending. Throws classification-conflict if two forms claim
/// different complexities for the same n.
std::vector<ClassifiedNumber> classify_low_integer_defect(std::uint64_t limit);

/// {n <= limit : D(n) <= 1} equals the classified set, with matching complexities.
VerificationReport verify_classification(std::uint64_t limit, const ComplexityTable& table);

/// For every tabulated ratio h with h * E(k) integral: ||h E(k)|| = k and h E(k) > E(k - 1). k >= 2.
VerificationReport verify_ratio_integrality(unsigned k, const ComplexityTable& table);

// ---------------------------------------------------------------------------
// Defect sets by residue
// ---------------------------------------------------------------------------

struct DefectEntry {
  Defect defect;
  std::uint64_t leader = 0;  // smallest n <= limit with this defect
};

/// Distinct defects of n in (1, limit] with ||n|| = a (mod 3) at or below
/// `bound`, ascending by exact comparison.
std::vector<DefectEntry> initial_segment(unsigned residue, const Threshold& bound, std::uint64_t limit,
                                         const ComplexityTable& table);

/// Defect implied by a spectrum row: Defect(first_integral_k, leader).
Defect row_defect(const SpectrumRow& row);

/// The defects below threshold(a, 1) found up to `limit` are exactly the row
/// defects whose leaders fit in `limit`, in row order; the ratios of classified
/// numbers enumerate the same h values in decreasing order.
VerificationReport verify_initial_segment(unsigned residue, std::uint64_t limit, const ComplexityTable& table);

/// D(n) equals integer_defect_from(defect_of(n)) for 1 < n <= limit.
VerificationReport verify_threshold_equivalence(std::uint64_t limit, const ComplexityTable& table);

/// Every defect at most 2 delta(2) comes from 3^k, 2*3^k or 4*3^k, and exactly
/// three distinct such values occur.
VerificationReport verify_smallest_defects(std::uint64_t limit, const ComplexityTable& table);

/// n has D(n) <= 1 iff 3^l n = h_{r,k} E(k) for some l, k >= K_{r,k}, r.
VerificationReport verify_table_coincidence(std::uint64_t limit, const ComplexityTable& table);

/// The counting form of D agrees with ||n|| - L(n) for n <= limit.
VerificationReport verify_interpolation(std::uint64_t limit, const ComplexityTable& table);

}  // namespace icx
