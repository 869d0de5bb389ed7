#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "concord/exec.hpp"

namespace concord {

/// Options for the verification suite. `tolerance` governs the exact
/// closed-form vs. integration comparisons (default 1e-9); the criteria with
/// tolerances of their own (1e-12 beta identities, Monte Carlo 3-sigma bands,
/// 0.005 / 0.01 sampling bands, -1e-12 rectangle floors) keep them regardless.
struct VerifyOptions {
  double tolerance = 1e-9;
  std::uint64_t seed = 42;
  std::int64_t mc_count = 1'000'000;
  Exec exec = Exec::Parallel;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double worst = 0.0;  // largest discrepancy observed, when meaningful
  std::string note;    // first failure detail, or extra context
  double seconds = 0.0;
};

/// Runs the whole closed-form vs. integration vs. Monte Carlo suite; one
/// result per criterion, in fixed order.
std::vector<CriterionResult> run_verification(const VerifyOptions& opts);

}  // namespace concord
