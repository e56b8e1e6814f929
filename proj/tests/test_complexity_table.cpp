#include <doctest.h>

#include <algorithm>
#include <random>

#include "icx/complexity_table.hpp"
#include "icx/error.hpp"
#include "icx/natural.hpp"

using namespace icx;

namespace {
const ComplexityTable& oracle_1e5() {
  static const ComplexityTable t = build_oracle(100000);
  return t;
}
}  // namespace

TEST_CASE("oracle small values") {
  auto t = build_oracle(11);
  CHECK(t.limit() == 11);
  CHECK(t[11] == 8);
  CHECK(build_oracle(1)[1] == 1);
  const unsigned expected[] = {1, 2, 3, 4, 5, 5, 6, 6, 6, 7, 8};
  for (unsigned n = 1; n <= 11; ++n) CHECK(t[n] == expected[n - 1]);
}

TEST_CASE("powers of three") {
  auto t = build_oracle(531441);
  CHECK(t[531441] == 36);
  for (unsigned k = 1, p = 3; k <= 12; ++k, p *= 3) CHECK(t[p] == 3 * k);
}

TEST_CASE("fast sieve values") {
  auto t = build_fast(2049);
  CHECK(t[107] == 16);
  CHECK(t[321] == 18);
  CHECK(t[683] == 22);
  CHECK(t[2049] == 23);
}

TEST_CASE("fast sieve agrees with oracle") {
  CHECK(build_fast(100000) == oracle_1e5());
  for (std::uint64_t lim : {1u, 2u, 3u, 7u, 100u, 1000u}) CHECK(build_fast(lim) == build_oracle(lim));
}

TEST_CASE("empty range") {
  try {
    build_oracle(0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_range);
  }
  CHECK_THROWS_AS(build_fast(0), Error);
}

TEST_CASE("checked lookup") {
  auto t = build_oracle(10);
  CHECK(t.at(10) == 7);
  try {
    (void)t.at(11);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::insufficient_table);
  }
  CHECK_THROWS_AS((void)t.at(0), Error);
}

TEST_CASE("numbers of a given complexity") {
  auto t = build_oracle(18);
  CHECK(numbers_with_complexity(t, 1) == std::vector<std::uint64_t>{1});
  CHECK(numbers_with_complexity(t, 3) == std::vector<std::uint64_t>{3});
  auto six = numbers_with_complexity(t, 6);
  REQUIRE(six.size() >= 2);
  CHECK(six[six.size() - 1] == 9);
  CHECK(six[six.size() - 2] == 8);
  CHECK_THROWS_AS(numbers_with_complexity(t, 9), Error);
}

TEST_CASE("log3 lower bound is exact") {
  CHECK(log3_lower_bound(1) == 0);
  CHECK(log3_lower_bound(3) == 3);
  CHECK(log3_lower_bound(4) == 4);
  for (std::uint64_t n : {2ull, 5ull, 26ull, 27ull, 28ull, 1000003ull, 4294967295ull}) {
    unsigned c = log3_lower_bound(n);
    Natural cube = to_natural(n) * to_natural(n) * to_natural(n);
    CHECK(pow3(c) >= cube);
    if (c > 0) CHECK(pow3(c - 1) < cube);
  }
}

TEST_CASE("table respects the cube lower bound") {
  const auto& t = oracle_1e5();
  for (std::uint64_t n = 1; n <= t.limit(); ++n) {
    if (t[n] < log3_lower_bound(n)) {
      FAIL("below lower bound at " << n);
    }
  }
}

TEST_CASE("sub-additive and sub-multiplicative") {
  const auto& t = oracle_1e5();
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::uint64_t> pick(1, 50000);
  for (int i = 0; i < 20000; ++i) {
    std::uint64_t a = pick(rng), b = pick(rng);
    if (a + b <= t.limit()) CHECK(t[a + b] <= t[a] + t[b]);
    std::uint64_t x = a % 316 + 1, y = b % 316 + 1;
    CHECK(t[x * y] <= t[x] + t[y]);
  }
  for (std::uint64_t n = 1; 3 * n <= t.limit(); ++n) {
    if (t[3 * n] > t[n] + 3) FAIL("||3n|| > ||n|| + 3 at " << n);
  }
}

TEST_CASE("bytes view") {
  auto t = build_oracle(5);
  auto b = t.bytes();
  CHECK(b.size() == 5);
  CHECK(std::vector<std::uint8_t>(b.begin(), b.end()) == std::vector<std::uint8_t>{1, 2, 3, 4, 5});
  ComplexityTable copy(std::vector<std::uint8_t>(b.begin(), b.end()));
  CHECK(copy == t);
}
