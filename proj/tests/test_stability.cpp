#include <doctest.h>

#include "icx/complexity_table.hpp"
#include "icx/defect.hpp"
#include "icx/error.hpp"
#include "icx/stability.hpp"

using namespace icx;

namespace {
const ComplexityTable& table_1e5() {
  static const ComplexityTable t = build_fast(100000);
  return t;
}
}  // namespace

TEST_CASE("orbit of 107") {
  auto t = build_oracle(963);
  auto r = probe(107, 2, t);
  CHECK(r.complexities == std::vector<unsigned>{16, 18, 21});
  CHECK(r.stable_complexity == 15);
  CHECK(r.first_stable_k == 1);
  // L(321) = 15 because E(15) = 243 <= 321 < 324 = E(16), so D(321) = 3 and
  // neither certification rule applies.
  CHECK(integer_defect(107, t) == 4);
  CHECK(integer_defect(321, t) == 3);
  CHECK_FALSE(r.certified);

  auto dst = stable_integer_defect(107, 2, t);
  CHECK(dst.value == 3);
  auto d = stable_defect(107, 2, t);
  CHECK(d.value.complexity == 15);
  CHECK(d.value.base == 107);
}

TEST_CASE("orbit of 683") {
  auto t = build_oracle(2049);
  auto r = probe(683, 1, t);
  CHECK(r.complexities == std::vector<unsigned>{22, 23});
  CHECK(r.stable_complexity == 20);
  CHECK(integer_defect(683, t) == 5);
  CHECK(integer_defect(2049, t) == 3);
  CHECK(stable_integer_defect(683, 1, t).value == 3);
}

TEST_CASE("the orbits of 107 and 683 settle at integer defect 3") {
  const auto& t = table_1e5();
  for (std::uint64_t n : {107u, 683u}) {
    auto r = probe(n, t);
    for (unsigned k = 1; k <= r.horizon; ++k) {
      std::uint64_t m = n;
      for (unsigned i = 0; i < k; ++i) m *= 3;
      CHECK(integer_defect(m, t) == 3);
    }
  }
}

TEST_CASE("powers of three are stable") {
  const auto& t = table_1e5();
  auto r = probe(9, 0, t);
  CHECK(r.complexities == std::vector<unsigned>{6});
  CHECK(r.stable_complexity == 6);
  CHECK(r.first_stable_k == 0);
  CHECK(r.certified);
  auto d = stable_defect(27, 0, t);
  CHECK(d.certified);
  CHECK(d.value.complexity == 9);
  CHECK(d.value.base == 27);
  CHECK(approximate(d.value) == doctest::Approx(0.0));
}

TEST_CASE("horizon range") {
  const auto& t = table_1e5();
  CHECK(default_horizon(1, t) == 10);
  CHECK(default_horizon(100000, t) == 0);
  try {
    probe(107, 7, t);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::insufficient_table);
  }
}

TEST_CASE("small integer defect means stable") {
  auto t = build_fast(100000);
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    if (integer_defect(n, t) > 2) continue;
    auto r = probe(n, t);
    REQUIRE(r.certified);
    REQUIRE(r.first_stable_k == 0);
    REQUIRE(stable_integer_defect(n, r.horizon, t).value == integer_defect(n, t));
  }
}

TEST_CASE("drops along the orbit") {
  const auto& t = table_1e5();
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    auto r = probe(n, t);
    unsigned drops = 0;
    for (unsigned k = 0; k + 1 < r.complexities.size(); ++k) {
      REQUIRE(r.complexities[k + 1] <= r.complexities[k] + 3);
      if (r.complexities[k + 1] < r.complexities[k] + 3) ++drops;
    }
    // the defect loses a positive integer at each drop and never goes negative
    Defect d = defect_of(n, t);
    REQUIRE(drops <= static_cast<unsigned>(approximate(d)));
    auto dst = stable_integer_defect(n, r.horizon, t);
    REQUIRE(integer_defect(n, t) - dst.value == t[n] - r.stable_complexity);
  }
}

TEST_CASE("zero and one integer defect are preserved") {
  const auto& t = table_1e5();
  for (std::uint64_t n = 2; n <= t.limit(); ++n) {
    unsigned d = integer_defect(n, t);
    unsigned dst = stable_integer_defect(n, default_horizon(n, t), t).value;
    REQUIRE((d == 0) == (dst == 0));
    REQUIRE((d == 1) == (dst == 1));
  }
}
