#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace icx {

struct Violation {
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> r;
  std::string expected;
  std::string actual;
  std::optional<std::uint64_t> n;
  std::string detail;
};

/// Result of one verification suite. Serialized as
/// {suite, parameters, passed, violations: [{k, r, expected, actual, ...}]}.
class VerificationReport {
 public:
  static constexpr std::size_t kMaxRecorded = 100;

  VerificationReport(std::string suite, nlohmann::json parameters)
      : suite_(std::move(suite)), parameters_(std::move(parameters)) {}

  void add(Violation v);
  /// Count a successful check.
  void pass() noexcept { ++checks_; }
  /// Record `v` unless ok; returns ok.
  bool expect(bool ok, Violation v);

  /// Fold another report's checks and violations into this one.
  void merge(const VerificationReport& other);

  void set_detail(const std::string& key, nlohmann::json value) { details_[key] = std::move(value); }

  bool passed() const noexcept { return violation_count_ == 0; }
  const std::string& suite() const noexcept { return suite_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }
  std::size_t violation_count() const noexcept { return violation_count_; }
  std::size_t checks() const noexcept { return checks_; }

  nlohmann::json to_json() const;

 private:
  std::string suite_;
  nlohmann::json parameters_;
  std::vector<Violation> violations_;  // first kMaxRecorded only
  std::size_t violation_count_ = 0;
  std::size_t checks_ = 0;
  nlohmann::json details_ = nlohmann::json::object();
};

}  // namespace icx
