#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "concord/copula.hpp"
#include "concord/exec.hpp"
#include "concord/rng.hpp"

namespace concord {

/// A point on the support of a copula; for shuffle sampling v = support(u).
struct SamplePoint {
  UnitValue u;
  UnitValue v;
};

/// Draws `count` points (u, support(u)) with u uniform from the seeded
/// generator (see rng.hpp for the fixed block scheme). Identical (count, seed)
/// gives bit-identical output in either execution mode.
std::vector<SamplePoint> sample_support(const ShuffleOfM& s, std::int64_t count,
                                        std::uint64_t seed, Exec exec = Exec::Parallel);

/// A Monte Carlo mean with its sampling uncertainty.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t count = 0;
  std::uint64_t seed = 0;
};

/// One estimator for the shared-stream kernel: per draw u, the contribution is
/// 4 * evaluand(u, support.support(u)) - 1, i.e. a concordance-functional draw
/// along the support path of `support`.
struct McSpec {
  const ShuffleOfM* support;
  const CopulaExpr* evaluand;
};

/// Runs all estimators over one shared u-draw stream of `count` draws. Each
/// returned estimate equals a standalone single-spec run with the same
/// (count, seed): the stream depends only on (count, seed), not on the spec
/// list or the execution mode.
std::vector<McEstimate> mc_run(std::span<const McSpec> specs, std::int64_t count,
                               std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace concord
