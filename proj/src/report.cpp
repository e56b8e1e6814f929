#include "icx/report.hpp"

namespace icx {

void VerificationReport::add(Violation v) {
  ++checks_;
  ++violation_count_;
  if (violations_.size() < kMaxRecorded) violations_.push_back(std::move(v));
}

bool VerificationReport::expect(bool ok, Violation v) {
  if (ok) {
    pass();
  } else {
    add(std::move(v));
  }
  return ok;
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_ += other.checks_;
  violation_count_ += other.violation_count_;
  for (const Violation& v : other.violations_) {
    if (violations_.size() >= kMaxRecorded) break;
    violations_.push_back(v);
  }
}

namespace {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out;
  out["suite"] = suite_;
  out["parameters"] = parameters_;
  out["passed"] = passed();
  out["checks"] = checks_;
  out["violation_count"] = violation_count_;
  nlohmann::json list = nlohmann::json::array();
  for (const Violation& v : violations_) {
    nlohmann::json j;
    j["k"] = optional_json(v.k);
    j["r"] = optional_json(v.r);
    j["expected"] = v.expected;
    j["actual"] = v.actual;
    if (v.n) j["n"] = *v.n;
    if (!v.detail.empty()) j["detail"] = v.detail;
    list.push_back(std::move(j));
  }
  out["violations"] = std::move(list);
  if (!details_.empty()) out["details"] = details_;
  return out;
}

}  // namespace icx
