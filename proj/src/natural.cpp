#include "icx/natural.hpp"

#include <vector>

#include "icx/error.hpp"

namespace icx {

namespace {

constexpr unsigned kPow3TableSize = 1024;

const std::vector<Natural>& pow3_table() {
  static const std::vector<Natural> table = [] {
    std::vector<Natural> t(kPow3TableSize);
    t[0] = 1;
    for (unsigned i = 1; i < kPow3TableSize; ++i) t[i] = t[i - 1] * 3;
    return t;
  }();
  return table;
}

}  // namespace

const Natural& pow3(unsigned e) {
  if (e >= kPow3TableSize) {
    thread_local Natural scratch;
    mpz_ui_pow_ui(scratch.get_mpz_t(), 3, e);
    return scratch;
  }
  return pow3_table()[e];
}

void mul_pow3(Natural& x, unsigned e) {
  if (e == 0) return;
  if (e < kPow3TableSize) {
    x *= pow3_table()[e];
    return;
  }
  Natural p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, e);
  x *= p;
}

bool fits_u64(const Natural& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Natural& v) {
  if (!fits_u64(v)) {
    throw Error(ErrorKind::invalid_argument, "value " + v.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

unsigned valuation3(const Natural& v) {
  if (sgn(v) == 0) throw Error(ErrorKind::invalid_argument, "3-adic valuation of zero");
  Natural q = v;
  unsigned e = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), 3)) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), 3);
    ++e;
  }
  return e;
}

int valuation3(const Rational& q) {
  return static_cast<int>(valuation3(Natural(q.get_num()))) -
         static_cast<int>(valuation3(Natural(q.get_den())));
}

}  // namespace icx
