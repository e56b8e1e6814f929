#include "icx/spectrum_verify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "icx/error.hpp"

namespace icx {

namespace {

using u128 = unsigned __int128;

std::uint64_t require_top(unsigned k, const ComplexityTable& table) {
  const auto top = max_with_complexity_u64(k);
  if (!top || *top > table.limit()) {
    throw Error(ErrorKind::insufficient_table, "E(" + std::to_string(k) + ") = " + max_with_complexity(k).get_str() +
                                                   " exceeds table limit " + std::to_string(table.limit()));
  }
  return *top;
}

void require_limit(std::uint64_t limit, const ComplexityTable& table) {
  if (limit > table.limit()) {
    throw Error(ErrorKind::insufficient_table,
                "limit " + std::to_string(limit) + " exceeds table limit " + std::to_string(table.limit()));
  }
}

std::string str(const Rational& q) { return q.get_str(); }

// Rows worth examining for numbers up to `limit`: family leaders grow like
// 3^{r/3}, so a few ranks per power of 3 past the tabulated ones suffice.
unsigned row_cap(unsigned residue, std::uint64_t limit) {
  unsigned digits = 0;
  for (std::uint64_t p = 1; p <= limit / 3; p *= 3) ++digits;
  return static_cast<unsigned>(tabulated_row_count(residue)) + 3 * (digits + 3);
}

bool integral_product(const Rational& h, const Natural& e, Natural& out) {
  const Natural scaled = h.get_num() * e;
  if (!mpz_divisible_p(scaled.get_mpz_t(), h.get_den_mpz_t())) return false;
  out = scaled / h.get_den();
  return true;
}

}  // namespace

std::vector<std::uint64_t> largest_within(unsigned k, std::size_t count, const ComplexityTable& table) {
  const std::uint64_t top = require_top(k, table);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t n = top; n >= 1 && out.size() < count; --n) {
    if (table[n] <= k) out.push_back(n);
  }
  return out;
}

std::uint64_t top_rank(unsigned k, unsigned r, const ComplexityTable& table) {
  const auto found = largest_within(k, std::size_t{r} + 1, table);
  if (found.size() <= r) {
    throw Error(ErrorKind::rank_exhausted, "only " + std::to_string(found.size()) +
                                               " numbers have complexity at most " + std::to_string(k));
  }
  return found[r];
}

VerificationReport verify_tables(unsigned k_max, const ComplexityTable& table) {
  VerificationReport report("tables", {{"kmax", k_max}});
  require_top(k_max, table);
  for (unsigned k = 2; k <= k_max; ++k) {
    const unsigned residue = k % 3;
    std::vector<SpectrumRow> rows;
    for (unsigned r = 0;; ++r) {
      SpectrumRow row = spectrum_row(residue, r);
      if (row.K > k) break;
      rows.push_back(std::move(row));
    }
    const Natural e = max_with_complexity(k);
    const std::uint64_t below = to_u64(max_with_complexity(k - 1));
    const auto actual = largest_within(k, rows.size(), table);
    for (const SpectrumRow& row : rows) {
      Natural expected;
      if (!integral_product(row.h, e, expected)) {
        report.add({k, row.r, "integral h*E(k)", str(row.h) + " * " + e.get_str(), std::nullopt, "not integral"});
        continue;
      }
      const std::string got = row.r < actual.size() ? std::to_string(actual[row.r]) : "rank exhausted";
      if (!report.expect(got == expected.get_str(), {k, row.r, expected.get_str(), got, std::nullopt, "E_r(k)"}))
        continue;
      const std::uint64_t n = actual[row.r];
      report.expect(table[n] == k, {k, row.r, std::to_string(k), std::to_string(table[n]), n, "complexity"});
      report.expect(n > below, {k, row.r, "> " + std::to_string(below), std::to_string(n), n, "exceeds E(k-1)"});
    }
  }
  return report;
}

std::vector<ClassifiedNumber> classify_low_integer_defect(std::uint64_t limit) {
  std::map<std::uint64_t, ClassifiedNumber> found;
  auto record = [&](u128 n, ClassifiedForm form) {
    auto [it, inserted] = found.try_emplace(static_cast<std::uint64_t>(n));
    ClassifiedNumber& entry = it->second;
    if (inserted) {
      entry.n = static_cast<std::uint64_t>(n);
      entry.claimed_complexity = form.claimed_complexity;
    } else if (entry.claimed_complexity != form.claimed_complexity) {
      throw Error(ErrorKind::classification_conflict,
                  "n = " + std::to_string(entry.n) + " claimed with complexities " +
                      std::to_string(entry.claimed_complexity) + " and " + std::to_string(form.claimed_complexity));
    }
    entry.forms.push_back(form);
  };

  if (limit >= 1) record(1, ClassifiedForm{ClassifiedForm::Kind::one, 0, 0, 0, 0, 1});

  for (unsigned a = 0; a <= 10; ++a) {
    u128 n = u128{1} << a;
    for (unsigned k = 0; n <= limit; ++k, n *= 3) {
      if (a == 0 && k == 0) continue;
      record(n, ClassifiedForm{ClassifiedForm::Kind::pow2_pow3, a, 0, 0, k, 2 * a + 3 * k});
    }
  }

  for (unsigned a = 0; a <= 2; ++a) {
    for (unsigned b = 0; a + b <= 2; ++b) {
      u128 inner = u128{1} << b;  // 2^b 3^l
      for (unsigned l = 0; (inner + 1) << a <= limit; ++l, inner *= 3) {
        if (b == 0 && l == 0) continue;
        u128 n = (inner + 1) << a;
        for (unsigned k = 0; n <= limit; ++k, n *= 3) {
          record(n, ClassifiedForm{ClassifiedForm::Kind::step_form, a, b, l, k, 2 * (a + b) + 3 * (l + k) + 1});
        }
      }
    }
  }

  std::vector<ClassifiedNumber> out;
  out.reserve(found.size());
  for (auto& [n, entry] : found) out.push_back(std::move(entry));
  return out;
}

VerificationReport verify_classification(std::uint64_t limit, const ComplexityTable& table) {
  VerificationReport report("classify", {{"limit", limit}});
  require_limit(limit, table);
  std::vector<ClassifiedNumber> classified;
  try {
    classified = classify_low_integer_defect(limit);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::classification_conflict) throw;
    report.add({std::nullopt, std::nullopt, "consistent claims", e.what(), std::nullopt, "classification conflict"});
    return report;
  }
  std::size_t next = 0;
  std::size_t low_count = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const bool low = integer_defect(n, table) <= 1;
    const bool listed = next < classified.size() && classified[next].n == n;
    low_count += low;
    report.expect(low == listed, {std::nullopt, std::nullopt, listed ? "D(n) <= 1" : "D(n) >= 2",
                                  "D(n) = " + std::to_string(integer_defect(n, table)), n, "membership"});
    if (listed) {
      const unsigned claimed = classified[next].claimed_complexity;
      report.expect(table[n] == claimed, {table[n], std::nullopt, std::to_string(claimed),
                                          std::to_string(table[n]), n, "claimed complexity"});
      ++next;
    }
  }
  report.set_detail("classified_count", classified.size());
  report.set_detail("low_defect_count", low_count);
  return report;
}

VerificationReport verify_ratio_integrality(unsigned k, const ComplexityTable& table) {
  VerificationReport report("v3lem", {{"k", k}});
  if (k < 2) throw Error(ErrorKind::undefined_argument, "ratio integrality needs k >= 2");
  require_top(k, table);
  const unsigned residue = k % 3;
  const Natural e = max_with_complexity(k);
  const std::uint64_t below = to_u64(max_with_complexity(k - 1));
  std::size_t integral = 0;
  for (unsigned r = 0;; ++r) {
    const SpectrumRow row = spectrum_row(residue, r);
    if (r >= tabulated_row_count(residue) && first_integral_k(residue, row.h) > k) break;
    Natural value;
    if (!integral_product(row.h, e, value)) continue;
    ++integral;
    const std::uint64_t n = to_u64(value);
    report.expect(table[n] == k, {k, r, std::to_string(k), std::to_string(table[n]), n, "complexity of h*E(k)"});
    report.expect(n > below, {k, r, "> " + std::to_string(below), std::to_string(n), n, "exceeds E(k-1)"});
  }
  report.set_detail("integral_rows", integral);
  return report;
}

std::vector<DefectEntry> initial_segment(unsigned residue, const Threshold& bound, std::uint64_t limit,
                                         const ComplexityTable& table) {
  require_limit(limit, table);
  std::vector<DefectEntry> found;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (table[n] % 3 != residue % 3) continue;
    Defect d = defect_of(n, table);
    if (within(d, bound)) found.push_back({std::move(d), n});
  }
  std::stable_sort(found.begin(), found.end(), [](const DefectEntry& x, const DefectEntry& y) {
    return compare_defects(x.defect, y.defect) == std::strong_ordering::less;
  });
  // Equal defects are adjacent and, by the stable sort over ascending n, led by the smallest n.
  std::vector<DefectEntry> distinct;
  for (DefectEntry& entry : found) {
    if (distinct.empty() || !same_value(distinct.back().defect, entry.defect)) distinct.push_back(std::move(entry));
  }
  return distinct;
}

Defect row_defect(const SpectrumRow& row) { return Defect(first_integral_k(row.residue, row.h), row.leader); }

VerificationReport verify_initial_segment(unsigned residue, std::uint64_t limit, const ComplexityTable& table) {
  VerificationReport report("initial-segment", {{"residue", residue}, {"limit", limit}});
  const auto segment = initial_segment(residue, threshold(residue, 1), limit, table);

  std::vector<SpectrumRow> expected;
  std::size_t complete_prefix = 0;
  bool gap = false;
  const Natural bound = to_natural(limit);
  for (unsigned r = 0; r < row_cap(residue, limit); ++r) {
    SpectrumRow row = spectrum_row(residue, r);
    if (row.leader <= bound) {
      if (!gap) ++complete_prefix;
      expected.push_back(std::move(row));
    } else {
      gap = true;
    }
  }
  report.set_detail("complete_prefix", complete_prefix);
  report.set_detail("found", segment.size());

  report.expect(segment.size() == expected.size(),
                {std::nullopt, std::nullopt, std::to_string(expected.size()) + " defects",
                 std::to_string(segment.size()) + " defects", std::nullopt, "segment length"});
  const std::size_t common = std::min(segment.size(), expected.size());
  for (std::size_t i = 0; i < common; ++i) {
    const SpectrumRow& row = expected[i];
    const DefectEntry& got = segment[i];
    const bool same = same_value(got.defect, row_defect(row)) && to_natural(got.leader) == row.leader;
    report.expect(same, {std::nullopt, row.r, "leader " + row.leader.get_str(), "leader " + std::to_string(got.leader),
                         got.leader, "defect order"});
  }

  // Ratios of the classified numbers in this class, descending, walk the h column.
  std::vector<Rational> ratios;
  for (const ClassifiedNumber& c : classify_low_integer_defect(limit)) {
    if (c.n == 1 || c.claimed_complexity % 3 != residue) continue;
    ratios.push_back(ratio_of(c.n, table));
  }
  std::sort(ratios.begin(), ratios.end(), [](const Rational& x, const Rational& y) { return x > y; });
  ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
  report.expect(ratios.size() == expected.size(),
                {std::nullopt, std::nullopt, std::to_string(expected.size()) + " ratios",
                 std::to_string(ratios.size()) + " ratios", std::nullopt, "ratio count"});
  for (std::size_t i = 0; i < std::min(ratios.size(), expected.size()); ++i) {
    report.expect(ratios[i] == expected[i].h,
                  {std::nullopt, expected[i].r, str(expected[i].h), str(ratios[i]), std::nullopt, "ratio order"});
  }
  return report;
}

VerificationReport verify_threshold_equivalence(std::uint64_t limit, const ComplexityTable& table) {
  VerificationReport report("dtod", {{"limit", limit}});
  require_limit(limit, table);
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const unsigned direct = integer_defect(n, table);
    const unsigned via_threshold = integer_defect_from(defect_of(n, table));
    report.expect(direct == via_threshold, {std::nullopt, std::nullopt, std::to_string(direct),
                                            std::to_string(via_threshold), n, "D(n) vs threshold search"});
  }
  return report;
}

VerificationReport verify_smallest_defects(std::uint64_t limit, const ComplexityTable& table) {
  VerificationReport report("small3", {{"limit", limit}});
  require_limit(limit, table);
  const Defect ceiling(4, std::uint64_t{4});  // 2 delta(2)
  std::vector<DefectEntry> values;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    Defect d = defect_of(n, table);
    if (compare_defects(d, ceiling) == std::strong_ordering::greater) continue;
    std::uint64_t core = n;
    while (core % 3 == 0) core /= 3;
    const bool shaped = core == 2 || core == 4 || (core == 1 && n > 1);
    report.expect(shaped, {std::nullopt, std::nullopt, "3^k, 2*3^k or 4*3^k", std::to_string(n), n, "small defect"});
    if (std::none_of(values.begin(), values.end(), [&](const DefectEntry& e) { return same_value(e.defect, d); })) {
      values.push_back({std::move(d), n});
    }
  }
  std::sort(values.begin(), values.end(), [](const DefectEntry& x, const DefectEntry& y) {
    return compare_defects(x.defect, y.defect) == std::strong_ordering::less;
  });
  const std::vector<Defect> expected = {Defect(3, std::uint64_t{3}), Defect(2, std::uint64_t{2}), ceiling};
  bool match = values.size() == expected.size();
  for (std::size_t i = 0; match && i < values.size(); ++i) match = same_value(values[i].defect, expected[i]);
  std::string leaders;
  for (const auto& v : values) leaders += (leaders.empty() ? "" : ",") + std::to_string(v.leader);
  report.expect(match, {std::nullopt, std::nullopt, "{0, delta(2), 2 delta(2)} led by 3,2,4", leaders,
                        std::nullopt, "distinct small defects"});
  return report;
}

VerificationReport verify_table_coincidence(std::uint64_t limit, const ComplexityTable& table) {
  VerificationReport report("coinci", {{"limit", limit}});
  require_limit(limit, table);

  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (integer_defect(n, table) > 1) continue;
    // 1 is reached through 3 = 3^1 * 1.
    const unsigned shift = n == 1 ? 1 : 0;
    const std::uint64_t m = n == 1 ? 3 : n;
    const unsigned cm = table.at(m);
    const unsigned residue = cm % 3;
    const Rational h = ratio_of(m, table);
    std::optional<SpectrumRow> match;
    for (unsigned r = 0; r < row_cap(residue, limit); ++r) {
      SpectrumRow row = spectrum_row(residue, r);
      if (row.h < h) break;
      if (row.h == h) {
        match = std::move(row);
        break;
      }
    }
    if (!report.expect(match.has_value(), {cm, std::nullopt, "a tabulated ratio", str(h), n, "ratio lookup"}))
      continue;
    const unsigned k = std::max(cm, match->K);
    const unsigned l = shift + (k - cm) / 3;
    Natural lhs = to_natural(n);
    mul_pow3(lhs, l);
    Natural rhs;
    const bool integral = integral_product(match->h, max_with_complexity(k), rhs);
    report.expect(integral && lhs == rhs,
                  {k, match->r, rhs.get_str(), lhs.get_str(), n, "3^l n = h E(k) with l = " + std::to_string(l)});
  }

  // Conversely every n with 3^l n = h E(k), k >= K, is core * 3^i for the
  // 3-free part core of h E(K).
  const Natural bound = to_natural(limit);
  for (unsigned residue = 0; residue < 3; ++residue) {
    for (unsigned r = 0; r < row_cap(residue, limit); ++r) {
      const SpectrumRow row = spectrum_row(residue, r);
      if (row.leader > bound) continue;
      Natural product;
      if (!report.expect(integral_product(row.h, max_with_complexity(row.K), product),
                         {row.K, r, "integral", str(row.h), std::nullopt, "h E(K)"}))
        continue;
      Natural core = product;
      while (mpz_divisible_ui_p(core.get_mpz_t(), 3)) core /= 3;
      for (Natural v = core; v <= bound; v *= 3) {
        const std::uint64_t n = to_u64(v);
        report.expect(integer_defect(n, table) <= 1, {row.K, r, "D(n) <= 1",
                                                       "D(n) = " + std::to_string(integer_defect(n, table)), n,
                                                       "table product"});
      }
    }
  }
  return report;
}

VerificationReport verify_interpolation(std::uint64_t limit, const ComplexityTable& table) {
  VerificationReport report("dinterp", {{"limit", limit}});
  require_limit(limit, table);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const unsigned counted = count_selfridge_values_above(n, table);
    const unsigned direct = integer_defect(n, table);
    report.expect(counted == direct,
                  {std::nullopt, std::nullopt, std::to_string(direct), std::to_string(counted), n, "Dinterp"});
  }
  return report;
}

}  // namespace icx
