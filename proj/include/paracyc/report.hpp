#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "paracyc/linmap.hpp"

namespace paracyc {

// One verified identity. `category` groups related identities (e.g.
// "monad.assoc", "cosimplicial", "cyclicity"); `witness` localizes the first
// discrepancy of a failed check in basis labels.
struct CheckResult {
  std::string category;
  std::string name;
  bool ok = true;
  std::string witness;
};

struct Report {
  std::vector<CheckResult> checks;

  void add(const std::string& category, const std::string& name, bool ok,
           const std::string& witness = "") {
    checks.push_back({category, name, ok, witness});
  }
  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  int failed() const {
    int n = 0;
    for (const auto& c : checks) n += c.ok ? 0 : 1;
    return n;
  }
  std::vector<std::string> failed_categories() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.ok && std::find(out.begin(), out.end(), c.category) == out.end())
        out.push_back(c.category);
    return out;
  }
};

// Pinpoint the first nonzero entry of lhs - rhs in basis labels.
std::string first_discrepancy(const LinMap& lhs, const LinMap& rhs);

// Convenience: record lhs == rhs under category/name, witnessing a failure.
void check_eq(Report& r, const std::string& category, const std::string& name, const LinMap& lhs,
              const LinMap& rhs);

}  // namespace paracyc
