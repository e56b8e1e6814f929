#include "icx/spectrum_tables.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <string>

#include "icx/error.hpp"

namespace icx {

namespace {

struct TabulatedRow {
  unsigned long num;
  unsigned long den;
  unsigned K;
  unsigned long leader;  // 0 when the leader comes from the family formula
};

// k = 0 (mod 3)
constexpr std::array<TabulatedRow, 11> kResidue0 = {{
    {1, 1, 3, 3},
    {8, 9, 6, 8},
    {64, 81, 12, 64},
    {7, 9, 12, 7},
    {20, 27, 12, 20},
    {19, 27, 12, 19},
    {512, 729, 18, 512},
    {56, 81, 18, 0},
    {55, 81, 18, 0},
    {164, 243, 18, 0},
    {163, 243, 18, 0},
}};

// k = 1 (mod 3), k > 1
constexpr std::array<TabulatedRow, 6> kResidue1 = {{
    {1, 1, 4, 4},
    {8, 9, 10, 32},
    {5, 6, 10, 10},
    {64, 81, 16, 256},
    {7, 9, 16, 0},
    {41, 54, 16, 0},
}};

// k = 2 (mod 3)
constexpr std::array<TabulatedRow, 15> kResidue2 = {{
    {1, 1, 2, 2},
    {8, 9, 8, 16},
    {5, 6, 8, 5},
    {64, 81, 14, 128},
    {7, 9, 14, 14},
    {20, 27, 14, 40},
    {13, 18, 14, 13},
    {19, 27, 14, 38},
    {512, 729, 20, 1024},
    {56, 81, 20, 0},
    {37, 54, 20, 0},
    {55, 81, 20, 0},
    {164, 243, 20, 0},
    {109, 162, 20, 0},
    {163, 243, 20, 0},
}};

std::span<const TabulatedRow> tabulated(unsigned residue) {
  switch (residue) {
    case 0: return kResidue0;
    case 1: return kResidue1;
    case 2: return kResidue2;
  }
  throw Error(ErrorKind::invalid_argument, "residue must be 0, 1 or 2, got " + std::to_string(residue));
}

Rational frac(const Natural& num, const Natural& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

const Rational kTwoThirds(2, 3);

// h of the closed-form families, valid for every rank past the irregular start.
Rational family_h(unsigned residue, unsigned r) {
  switch (residue) {
    case 0: {  // r = 2n - 1: 2/3 + 2/3^n ; r = 2n: 2/3 + 1/3^n
      const unsigned n = (r + 1) / 2;
      return kTwoThirds + frac(Natural(r % 2 == 1 ? 2 : 1), pow3(n));
    }
    case 2: {  // r = 3n - 3, 3n - 2, 3n - 1
      const unsigned n = r / 3 + 1;
      switch (r % 3) {
        case 0: return kTwoThirds + frac(2, pow3(n));
        case 1: return kTwoThirds + frac(1, 2 * pow3(n - 1));
        default: return kTwoThirds + frac(1, pow3(n));
      }
    }
    default: {  // r = n + 2: 3/4 + 1/(4 * 3^n)
      const unsigned n = r - 2;
      return Rational(3, 4) + frac(1, 4 * pow3(n));
    }
  }
}

Natural family_leader(unsigned residue, unsigned r) {
  switch (residue) {
    case 0: {
      const unsigned n = (r + 1) / 2;
      if (r % 2 == 1) return Natural(2 * (pow3(n - 1) + 1));
      return Natural(2 * pow3(n - 1) + 1);
    }
    case 2: {
      const unsigned n = r / 3 + 1;
      switch (r % 3) {
        case 0: return 4 * (pow3(n - 1) + 1);
        case 1: return 4 * pow3(n - 2) + 1;  // ratio 2/3 + 1/(2 * 3^(n-1)) at E(3n - 1)
        default: return 2 * (2 * pow3(n - 1) + 1);
      }
    }
    default:
      return pow3(r - 1) + 1;
  }
}

unsigned family_K(unsigned residue, unsigned r) {
  switch (residue) {
    case 0: return 3 * ((r + 1) / 2);
    case 2: return 3 * (r / 3 + 1) + 2;
    default: return 3 * (r - 2) + 4;
  }
}

}  // namespace

std::size_t tabulated_row_count(unsigned residue) { return tabulated(residue).size(); }

unsigned first_integral_k(unsigned residue, const Rational& h) {
  static constexpr unsigned kOffset[3] = {0, 4, 2};
  static constexpr unsigned kSmallest[3] = {3, 4, 2};
  const int v = valuation3(h);
  const int k = -3 * std::min(v, 0) + static_cast<int>(kOffset[residue % 3]);
  return std::max(static_cast<unsigned>(k), kSmallest[residue % 3]);
}

SpectrumRow spectrum_row(unsigned residue, unsigned r) {
  const auto rows = tabulated(residue);
  SpectrumRow row;
  row.r = r;
  row.residue = residue;
  if (r < rows.size()) {
    const TabulatedRow& t = rows[r];
    row.h = Rational(t.num, t.den);
    row.h.canonicalize();
    row.K = t.K;
    row.leader = t.leader != 0 ? Natural(t.leader) : family_leader(residue, r);
  } else {
    row.h = family_h(residue, r);
    row.K = family_K(residue, r);
    row.leader = family_leader(residue, r);
  }
  return row;
}

std::vector<SpectrumRow> spectrum_rows(unsigned residue, unsigned count) {
  std::vector<SpectrumRow> out;
  out.reserve(count);
  for (unsigned r = 0; r < count; ++r) out.push_back(spectrum_row(residue, r));
  return out;
}

}  // namespace icx
