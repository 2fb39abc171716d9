#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauerlab/certificate.hpp"
#include "brauerlab/envelope.hpp"

namespace brauerlab {

constexpr int kCriterionCount = 9;  // 10 (determinism) needs two process runs, see the acceptance driver

struct CriterionResult {
  int id = 0;
  std::string title;
  Certificate required;     // decides pass/fail
  Certificate diagnostics;  // reported, not counted
  std::string note;
  double seconds = 0;
  bool passed() const { return required.ok(); }
};

/// One acceptance criterion, 1..9; randomized criteria draw from `seed`.
CriterionResult run_criterion(int id, std::uint64_t seed);
/// Criteria 1..9, `jobs` at a time, results in id order.
std::vector<CriterionResult> run_selftest(std::uint64_t seed, unsigned jobs = 1);
/// Envelope with one check per criterion; per-criterion details under result.
CertificateEnvelope selftest_envelope(const std::vector<CriterionResult>& results, std::uint64_t seed);

}  // namespace brauerlab
