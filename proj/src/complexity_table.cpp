#include "icx/complexity_table.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "icx/defect.hpp"
#include "icx/error.hpp"
#include "icx/natural.hpp"

namespace icx {

namespace {

constexpr std::uint8_t kUnset = std::numeric_limits<std::uint8_t>::max();

void require_nonempty(std::uint64_t limit) {
  if (limit == 0) throw Error(ErrorKind::empty_range, "complexity table limit must be at least 1");
}

// thresholds[c] = floor(cbrt(3^c)) + 1, the smallest m with m^3 > 3^c, so that
// log3_lower_bound(m) = #{c : thresholds[c] <= m}.
std::vector<std::uint64_t> lower_bound_thresholds(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  Natural root;
  for (unsigned c = 0;; ++c) {
    mpz_root(root.get_mpz_t(), pow3(c).get_mpz_t(), 3);
    root += 1;
    if (!fits_u64(root) || to_u64(root) > limit) break;
    out.push_back(to_u64(root));
  }
  return out;
}

}  // namespace

ComplexityTable::ComplexityTable(std::vector<std::uint8_t> values) {
  values_.reserve(values.size() + 1);
  values_.push_back(0);
  values_.insert(values_.end(), values.begin(), values.end());
}

unsigned ComplexityTable::at(std::uint64_t n) const {
  if (!contains(n)) {
    throw Error(ErrorKind::insufficient_table,
                "n = " + std::to_string(n) + " outside table range [1, " + std::to_string(limit()) + "]");
  }
  return values_[n];
}

unsigned log3_lower_bound(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::undefined_argument, "log3_lower_bound(0)");
  const Natural v = to_natural(n);
  const Natural cube = v * v * v;
  unsigned c = 0;
  while (pow3(c) < cube) ++c;
  return c;
}

ComplexityTable build_oracle(std::uint64_t limit) {
  require_nonempty(limit);
  std::vector<std::uint8_t> v(limit + 1, 0);
  // mirror[limit - m] == v[m], so that v[n - a] = mirror[limit - n + a] is read
  // in ascending order alongside v[a].
  std::vector<std::uint8_t> mirror(limit + 1, 0);
  v[1] = 1;
  mirror[limit - 1] = 1;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    std::uint8_t best = kUnset;
    for (std::uint64_t a = 2; a * a <= n; ++a) {
      if (n % a == 0) best = std::min<std::uint8_t>(best, v[a] + v[n / a]);
    }
    // Every value is below 128, so byte addition cannot wrap.
    const std::uint8_t* lo = v.data() + 1;
    const std::uint8_t* hi = mirror.data() + (limit - n + 1);
    const std::uint64_t half = n / 2;
    std::uint8_t sum_best = kUnset;
    for (std::uint64_t i = 0; i < half; ++i) {
      const std::uint8_t s = static_cast<std::uint8_t>(lo[i] + hi[i]);
      sum_best = s < sum_best ? s : sum_best;
    }
    v[n] = std::min(best, sum_best);
    mirror[limit - n] = v[n];
  }
  v.erase(v.begin());
  return ComplexityTable(std::move(v));
}

ComplexityTable build_fast(std::uint64_t limit) {
  require_nonempty(limit);
  if (limit >= std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::invalid_argument, "build_fast supports limits below 2^32");
  }
  std::vector<std::uint8_t> v(limit + 1, kUnset);
  v[1] = 1;

  // by_complexity[c] lists the finished n with ||n|| = c, ascending.
  std::vector<std::vector<std::uint32_t>> by_complexity(2);
  by_complexity[1].push_back(1);

  const auto thresholds = lower_bound_thresholds(limit);
  std::size_t half_bound = 0;  // log3_lower_bound(ceil(n / 2))

  auto push_products = [&](std::uint64_t n) {
    for (std::uint64_t a = 2; a <= n && a * n <= limit; ++a) {
      const auto c = static_cast<std::uint8_t>(v[a] + v[n]);
      if (c < v[a * n]) v[a * n] = c;
    }
  };
  push_products(1);

  for (std::uint64_t n = 2; n <= limit; ++n) {
    unsigned best = std::min<unsigned>(v[n], v[n - 1] + 1u);

    const std::uint64_t half = n / 2;
    const std::uint64_t upper_half = n - half;
    while (half_bound < thresholds.size() && thresholds[half_bound] <= upper_half) ++half_bound;

    // Any split n = a + (n - a) with a <= n/2 costs at least c + half_bound.
    for (unsigned c = 1; c < by_complexity.size() && c + half_bound < best; ++c) {
      for (const std::uint32_t a : by_complexity[c]) {
        if (a > half) break;
        const unsigned total = c + v[n - a];
        if (total < best) {
          best = total;
          if (c + half_bound >= best) break;
        }
      }
    }

    v[n] = static_cast<std::uint8_t>(best);
    if (best >= by_complexity.size()) by_complexity.resize(best + 1);
    by_complexity[best].push_back(static_cast<std::uint32_t>(n));
    push_products(n);
  }
  v.erase(v.begin());
  return ComplexityTable(std::move(v));
}

std::vector<std::uint64_t> numbers_with_complexity(const ComplexityTable& table, unsigned k) {
  if (k == 0) throw Error(ErrorKind::undefined_argument, "complexity must be at least 1");
  const auto top = max_with_complexity_u64(k);
  if (!top || *top > table.limit()) {
    throw Error(ErrorKind::insufficient_table,
                "listing complexity " + std::to_string(k) + " needs a table up to E(k) = " +
                    max_with_complexity(k).get_str());
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= *top; ++n) {
    if (table[n] == k) out.push_back(n);
  }
  return out;
}

}  // namespace icx
