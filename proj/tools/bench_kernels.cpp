// Compares the serial reference kernels against the OpenMP-parallel ones and
// checks that both produce identical results. Usage: concord-bench [draws].

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "concord/bounds.hpp"
#include "concord/concordance.hpp"
#include "concord/grid.hpp"

namespace {

template <class F>
double time_s(const F& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::int64_t draws = argc > 1 ? std::atoll(argv[1]) : 4'000'000;
  const int grid_n = 2001;

  auto [lo, up] = concord::beta_bound_copulas(0.3);
  const concord::CopulaExpr cup = concord::CopulaExpr::shuffle(up);
  const concord::CopulaExpr pi = concord::CopulaExpr::product();

  std::printf("%-28s %12s %12s %9s %s\n", "kernel", "serial [s]", "parallel [s]", "speedup",
              "identical");

  {
    concord::McEstimate se, pe;
    const std::vector<concord::McSpec> specs{{&up, &pi}, {&up, &cup}};
    const double ts = time_s([&] {
      se = concord::mc_run(specs, draws, 42, concord::Exec::Serial).front();
    });
    const double tp = time_s([&] {
      pe = concord::mc_run(specs, draws, 42, concord::Exec::Parallel).front();
    });
    const bool same = se.mean == pe.mean && se.std_error == pe.std_error;
    std::printf("%-28s %12.3f %12.3f %8.2fx %s\n", "mc_run (2 estimators)", ts, tp, ts / tp,
                same ? "yes" : "NO");
  }
  {
    std::vector<double> gs, gp;
    const double ts = time_s([&] { gs = concord::eval_grid(cup, grid_n, concord::Exec::Serial); });
    const double tp =
        time_s([&] { gp = concord::eval_grid(cup, grid_n, concord::Exec::Parallel); });
    std::printf("%-28s %12.3f %12.3f %8.2fx %s\n", "eval_grid (2001x2001)", ts, tp, ts / tp,
                gs == gp ? "yes" : "NO");
  }
  {
    std::vector<concord::SamplePoint> ps, pp;
    const double ts =
        time_s([&] { ps = concord::sample_support(lo, draws, 7, concord::Exec::Serial); });
    const double tp =
        time_s([&] { pp = concord::sample_support(lo, draws, 7, concord::Exec::Parallel); });
    bool same = ps.size() == pp.size();
    for (std::size_t i = 0; same && i < ps.size(); ++i)
      same = ps[i].u.value() == pp[i].u.value() && ps[i].v.value() == pp[i].v.value();
    std::printf("%-28s %12.3f %12.3f %8.2fx %s\n", "sample_support", ts, tp, ts / tp,
                same ? "yes" : "NO");
  }
  return 0;
}
