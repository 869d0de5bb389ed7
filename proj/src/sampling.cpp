#include "concord/sampling.hpp"

#include <cmath>

namespace concord {

namespace {

std::int64_t block_count(std::int64_t count) {
  return (count + kSampleBlock - 1) / kSampleBlock;
}

}  // namespace

std::vector<SamplePoint> sample_support(const ShuffleOfM& s, std::int64_t count,
                                        std::uint64_t seed, Exec exec) {
  if (count < 1) fail(Errc::OutOfRange, "sample count must be >= 1");
  std::vector<SamplePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back({0.0, 0.0});

  const std::int64_t nb = block_count(count);
  auto run_block = [&](std::int64_t b) {
    SplitMix64 g(block_seed(seed, static_cast<std::uint64_t>(b)));
    const std::int64_t lo = b * kSampleBlock;
    const std::int64_t hi = std::min(count, lo + kSampleBlock);
    for (std::int64_t i = lo; i < hi; ++i) {
      const double u = g.next_unit();
      out[static_cast<std::size_t>(i)] = {u, s.support(u)};
    }
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b) run_block(b);
  } else {
    for (std::int64_t b = 0; b < nb; ++b) run_block(b);
  }
  return out;
}

std::vector<McEstimate> mc_run(std::span<const McSpec> specs, std::int64_t count,
                               std::uint64_t seed, Exec exec) {
  if (count < 2) fail(Errc::OutOfRange, "mc draw count must be >= 2");
  const std::size_t m = specs.size();
  const std::int64_t nb = block_count(count);

  // Distinct support maps evaluated once per draw.
  std::vector<const ShuffleOfM*> supports;
  std::vector<std::size_t> support_of(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t k = 0;
    while (k < supports.size() && supports[k] != specs[j].support) ++k;
    if (k == supports.size()) supports.push_back(specs[j].support);
    support_of[j] = k;
  }

  // Per-block partial sums, reduced serially in block order afterwards so the
  // result is independent of the execution mode.
  std::vector<double> sum(static_cast<std::size_t>(nb) * m, 0.0);
  std::vector<double> sumsq(static_cast<std::size_t>(nb) * m, 0.0);

  auto run_block = [&](std::int64_t b) {
    SplitMix64 g(block_seed(seed, static_cast<std::uint64_t>(b)));
    const std::int64_t lo = b * kSampleBlock;
    const std::int64_t hi = std::min(count, lo + kSampleBlock);
    double* bs = &sum[static_cast<std::size_t>(b) * m];
    double* bq = &sumsq[static_cast<std::size_t>(b) * m];
    std::vector<double> vs(supports.size());
    for (std::int64_t i = lo; i < hi; ++i) {
      const double u = g.next_unit();
      for (std::size_t k = 0; k < supports.size(); ++k) vs[k] = supports[k]->support(u);
      for (std::size_t j = 0; j < m; ++j) {
        const double y = 4.0 * specs[j].evaluand->eval(u, vs[support_of[j]]) - 1.0;
        bs[j] += y;
        bq[j] += y * y;
      }
    }
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b) run_block(b);
  } else {
    for (std::int64_t b = 0; b < nb; ++b) run_block(b);
  }

  std::vector<McEstimate> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    double s1 = 0.0, s2 = 0.0;
    for (std::int64_t b = 0; b < nb; ++b) {
      s1 += sum[static_cast<std::size_t>(b) * m + j];
      s2 += sumsq[static_cast<std::size_t>(b) * m + j];
    }
    const double n = static_cast<double>(count);
    const double mean = s1 / n;
    const double var = std::max(0.0, (s2 - n * mean * mean) / (n - 1.0));
    out[j] = {mean, std::sqrt(var / n), count, seed};
  }
  return out;
}

}  // namespace concord
