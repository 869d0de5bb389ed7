#include "concord/grid.hpp"

namespace concord {

std::vector<double> eval_grid(const CopulaExpr& c, int n, Exec exec) {
  if (n < 2) fail(Errc::OutOfRange, "grid size must be >= 2");
  std::vector<double> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  const double step = 1.0 / (n - 1);
  auto run_row = [&](int i) {
    const double u = std::min(1.0, i * step);
    double* row = &out[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)];
    for (int j = 0; j < n; ++j) row[j] = c.eval(u, std::min(1.0, j * step));
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) run_row(i);
  } else {
    for (int i = 0; i < n; ++i) run_row(i);
  }
  return out;
}

}  // namespace concord
