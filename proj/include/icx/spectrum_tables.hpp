#pragma once

#include <cstddef>
#include <vector>

#include "icx/natural.hpp"

namespace icx {

/// One rank of the spectrum of largest numbers of a given complexity: for
/// k >= K with k = residue (mod 3), the r-th largest number of complexity at
/// most k is h * E(k). `leader` is the smallest n > 1 whose ratio n / E(||n||)
/// equals h with ||n|| = residue (mod 3).
struct SpectrumRow {
  unsigned r = 0;
  unsigned residue = 0;
  Rational h;
  unsigned K = 0;
  Natural leader;
};

/// Row r for residue class `residue` (0, 1 or 2). The finite irregular rows
/// are tabulated; later rows come from the closed-form families.
SpectrumRow spectrum_row(unsigned residue, unsigned r);

/// Rows 0..count-1.
std::vector<SpectrumRow> spectrum_rows(unsigned residue, unsigned count);

/// Number of tabulated rows before the closed-form family takes over (11, 6, 15).
std::size_t tabulated_row_count(unsigned residue);

/// Smallest k = residue (mod 3) at which h * E(k) is an integer: -3 v_3(h)
/// plus 0, 4 or 2, never below the smallest admissible k of the class.
unsigned first_integral_k(unsigned residue, const Rational& h);

}  // namespace icx
