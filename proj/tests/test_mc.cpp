#include <doctest.h>

#include <cmath>

#include "concord/bounds.hpp"
#include "concord/concordance.hpp"

using namespace concord;

namespace {

constexpr std::int64_t kDraws = 1'000'000;

const CopulaExpr kM = CopulaExpr::frechet_upper();
const CopulaExpr kPi = CopulaExpr::product();

bool within_band(const McEstimate& e, double exact, double floor_band = 0.0) {
  return std::abs(e.mean - exact) <= std::max(3.0 * e.std_error, floor_band);
}

}  // namespace

TEST_CASE("mc_concordance_q agrees with the closed values") {
  CHECK(within_band(mc_concordance_q(kM, kM, kDraws, 42), 1.0));

  auto [lo, up] = beta_bound_copulas(0.0);
  const CopulaExpr clo = CopulaExpr::shuffle(lo);
  const CopulaExpr cup = CopulaExpr::shuffle(up);
  CHECK(within_band(mc_concordance_q(clo, kPi, kDraws, 42), -13.0 / 48.0));
  CHECK(within_band(mc_concordance_q(cup, kPi, kDraws, 42), 13.0 / 48.0));

  CHECK_THROWS_AS(mc_concordance_q(kM, kM, 999, 42), CopulaError);
  CHECK_THROWS_AS(mc_concordance_q(kPi, kM, kDraws, 42), CopulaError);
}

TEST_CASE("mc kernels: serial and parallel execution are bit-identical") {
  auto [lo, up] = beta_bound_copulas(0.5);
  const CopulaExpr clo = CopulaExpr::shuffle(lo);
  const auto ser = mc_concordance_q(clo, kPi, 200'000, 11, Exec::Serial);
  const auto par = mc_concordance_q(clo, kPi, 200'000, 11, Exec::Parallel);
  CHECK(ser.mean == par.mean);
  CHECK(ser.std_error == par.std_error);

  const auto s1 = sample_support(lo, 100'000, 3, Exec::Serial);
  const auto s2 = sample_support(lo, 100'000, 3, Exec::Parallel);
  REQUIRE(s1.size() == s2.size());
  for (std::size_t i = 0; i < s1.size(); i += 997) {
    CHECK(s1[i].u.value() == s2[i].u.value());
    CHECK(s1[i].v.value() == s2[i].v.value());
  }
}

TEST_CASE("fused multi-estimator runs equal standalone runs draw for draw") {
  auto [lo, up] = beta_bound_copulas(-0.4);
  const CopulaExpr clo = CopulaExpr::shuffle(lo);
  const CopulaExpr cup = CopulaExpr::shuffle(up);
  const std::vector<McSpec> specs{{&lo, &kPi}, {&lo, &clo}, {&up, &cup}};
  const auto fused = mc_run(specs, 50'000, 42, Exec::Parallel);
  const auto alone0 = mc_concordance_q(clo, kPi, 50'000, 42);
  const auto alone1 = mc_concordance_q(clo, clo, 50'000, 42);
  const auto alone2 = mc_concordance_q(cup, cup, 50'000, 42);
  CHECK(fused[0].mean == alone0.mean);
  CHECK(fused[0].std_error == alone0.std_error);
  CHECK(fused[1].mean == alone1.mean);
  CHECK(fused[2].mean == alone2.mean);
}

TEST_CASE("mixtures sample through their component selector") {
  auto [lo, up] = beta_bound_copulas(0.0);
  const CopulaExpr mix = CopulaExpr::mixture(
      {{0.3, CopulaExpr::shuffle(lo)}, {0.7, CopulaExpr::shuffle(up)}});
  const double exact = concordance_q(mix, kPi);
  CHECK(within_band(mc_concordance_q(mix, kPi, kDraws, 42), exact, 0.005));
}

TEST_CASE("sample_support: degenerate shuffles and determinism") {
  const auto on_m = sample_support(ShuffleOfM::identity(), 3, 7);
  REQUIRE(on_m.size() == 3);
  for (const auto& p : on_m) CHECK(p.v.value() == p.u.value());

  const auto on_w = sample_support(ShuffleOfM::countermonotone(), 3, 7);
  for (const auto& p : on_w) CHECK(p.v.value() == doctest::Approx(1.0 - p.u.value()).epsilon(1e-15));

  const auto again = sample_support(ShuffleOfM::identity(), 3, 7);
  for (std::size_t i = 0; i < 3; ++i) CHECK(on_m[i].u.value() == again[i].u.value());
}

TEST_CASE("empirical rank statistics: exact on monotone clouds, close on the bounds") {
  const auto on_m = sample_support(ShuffleOfM::identity(), 200, 5);
  auto em = empirical_measures(on_m);
  CHECK(em.at(MeasureKind::Tau) == 1.0);
  CHECK(em.at(MeasureKind::Rho) == doctest::Approx(1.0).epsilon(1e-12));

  const auto on_w = sample_support(ShuffleOfM::countermonotone(), 200, 5);
  em = empirical_measures(on_w);
  CHECK(em.at(MeasureKind::Tau) == -1.0);
  CHECK(em.at(MeasureKind::Rho) == doctest::Approx(-1.0).epsilon(1e-12));

  auto [lo, up] = beta_bound_copulas(0.0);
  const auto cloud = empirical_measures(sample_support(up, kDraws, 42));
  CHECK(std::abs(cloud.at(MeasureKind::Tau) - 0.75) <= 0.01);
  CHECK(std::abs(cloud.at(MeasureKind::Rho) - 0.8125) <= 0.01);
  CHECK(std::abs(cloud.at(MeasureKind::Beta) - 0.0) <= 0.01);

  // The sign-quadrant statistic of the lower bound's support cloud.
  const auto lo_cloud = empirical_measures(sample_support(lo, kDraws, 42));
  CHECK(std::abs(lo_cloud.at(MeasureKind::Beta) - 0.0) <= 0.005);

  CHECK_THROWS_AS(empirical_measures(sample_support(lo, 9, 1)), CopulaError);
}

TEST_CASE("mc_measure matches the exact engine for all five kinds on the bounds") {
  for (double t : {-0.9, 0.0, 0.9}) {
    auto [lo, up] = beta_bound_copulas(t);
    for (const ShuffleOfM& s : {lo, up}) {
      const CopulaExpr c = CopulaExpr::shuffle(s);
      for (MeasureKind kind : kAllMeasures) {
        const auto est = mc_measure(kind, c, kDraws, 42);
        const double exact = measure(kind, c).value;
        CHECK(std::abs(est.mean - exact) <= std::max(3.0 * est.std_error, 0.005));
      }
    }
  }
  CHECK_THROWS_AS(mc_measure(MeasureKind::Tau, kPi, kDraws, 42), CopulaError);
}
