#pragma once

#include <vector>

#include "concord/copula.hpp"
#include "concord/exec.hpp"

namespace concord {

/// Evaluates C on the uniform n x n grid u_i = i/(n-1), v_j = j/(n-1),
/// row-major (out[i*n + j] = C(u_i, v_j)). Both execution modes produce
/// identical results; Parallel shards rows across threads.
std::vector<double> eval_grid(const CopulaExpr& c, int n, Exec exec = Exec::Parallel);

}  // namespace concord
