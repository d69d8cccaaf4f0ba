#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cyclo3 {

/// Outcome of one exact identity or table comparison.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // first differing coordinate and both values on failure
};

/// A list of named checks. Verification failures are report outcomes, never
/// exceptions.
struct Report {
  std::string title;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }

  void append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back({other.title + ": " + c.name, c.passed, c.detail});
  }

  const Check* first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Report& r) {
  os << r.title << (r.passed() ? " [ok]" : " [FAILED]") << '\n';
  for (const auto& c : r.checks) {
    os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
  }
  return os;
}

}  // namespace cyclo3
