#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace icx {

/// Unbounded natural number.
using Natural = mpz_class;
/// Exact rational in canonical (lowest-terms) form.
using Rational = mpq_class;

/// 3^e. Small exponents are served from a precomputed table.
const Natural& pow3(unsigned e);

/// x *= 3^e
void mul_pow3(Natural& x, unsigned e);

inline Natural to_natural(std::uint64_t v) {
  Natural r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

/// Throws if `v` does not fit in 64 bits.
std::uint64_t to_u64(const Natural& v);
bool fits_u64(const Natural& v);

/// Exponent of 3 in the factorization of a nonzero natural.
unsigned valuation3(const Natural& v);

/// Exponent of 3 in a nonzero rational (negative when 3 divides the denominator).
int valuation3(const Rational& q);

inline std::string to_string(const Natural& v) { return v.get_str(); }

}  // namespace icx
