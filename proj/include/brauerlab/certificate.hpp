#pragma once

#include <string>
#include <vector>

namespace brauerlab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named checks.
struct Certificate {
  std::vector<CheckResult> checks;

  bool ok() const;
  /// Name of the first failed check, empty when all passed.
  std::string failure() const;
  void add(std::string name, bool passed, std::string detail = "");
  void append(const Certificate& other, const std::string& prefix = "");
};

}  // namespace brauerlab
