#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "concord/concordance.hpp"
#include "concord/rng.hpp"

using namespace concord;

namespace {

const CopulaExpr kM = CopulaExpr::frechet_upper();
const CopulaExpr kW = CopulaExpr::frechet_lower();
const CopulaExpr kPi = CopulaExpr::product();

CopulaExpr lower_t0() {
  return CopulaExpr::shuffle(
      ShuffleOfM({0.0, 0.25, 0.5, 0.75, 1.0}, {4, 2, 3, 1}, {-1, -1, -1, -1}));
}

CopulaExpr upper_t0() {
  return CopulaExpr::shuffle(ShuffleOfM({0.0, 0.25, 0.5, 0.75, 1.0}, {1, 3, 2, 4}, {1, 1, 1, 1}));
}

// Independent midpoint-rule oracles (coarse but implementation-free).
template <class F>
double oracle_line_integral(const F& f, int n = 200000) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += f((i + 0.5) / n);
  return acc / n;
}

template <class F>
double oracle_square_integral(const F& f, int n = 1500) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc += f((i + 0.5) / n, (j + 0.5) / n);
  return acc / (static_cast<double>(n) * n);
}

}  // namespace

TEST_CASE("Q on the classic pairs, against independent quadrature oracles") {
  // Q(M,M): the path integrand is u, integral 1/2.
  CHECK(concordance_q(kM, kM) == doctest::Approx(1.0).epsilon(1e-12));

  // Q(M,W): oracle integral of max(0, 2u-1) is 1/4, so Q = 0.
  const double mw_oracle = oracle_line_integral([](double x) { return std::max(0.0, 2.0 * x - 1.0); });
  CHECK(mw_oracle == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(concordance_q(kM, kW) == doctest::Approx(4.0 * 0.25 - 1.0).epsilon(1e-12));

  // Q(Pi,M): oracle integral of min(u,v) over the square is 1/3, so Q = 1/3.
  const double pim_oracle =
      oracle_square_integral([](double x, double y) { return std::min(x, y); });
  CHECK(pim_oracle == doctest::Approx(1.0 / 3.0).epsilon(1e-5));
  CHECK(concordance_q(kPi, kM) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  CHECK(concordance_q(kPi, kPi) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(concordance_q(kW, kW) == doctest::Approx(-1.0).epsilon(1e-12));

  // Q(W, lower t=0 bound) = -3/4; cross-checked against the oracle too.
  const CopulaExpr lo = lower_t0();
  const double wlo_oracle = oracle_line_integral(
      [&](double x) { return lo.eval(x, 1.0 - x); });
  CHECK(4.0 * wlo_oracle - 1.0 == doctest::Approx(-0.75).epsilon(1e-5));
  CHECK(concordance_q(kW, lo) == doctest::Approx(-0.75).epsilon(1e-12));

  // Q(lower, Pi) = -13/48, oracle on the path x * s(x).
  const ShuffleOfM los = lo.as_shuffle();
  const double lopi_oracle =
      oracle_line_integral([&](double x) { return x * los.support(x); });
  CHECK(4.0 * lopi_oracle - 1.0 == doctest::Approx(-13.0 / 48.0).epsilon(1e-5));
  CHECK(concordance_q(lo, kPi) == doctest::Approx(-13.0 / 48.0).epsilon(1e-12));
}

TEST_CASE("measure values at the reference copulas") {
  CHECK(measure(MeasureKind::Tau, kM).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(measure(MeasureKind::Rho, kW).value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(measure(MeasureKind::Beta, kPi).value == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(measure(MeasureKind::Footrule, kW).value == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(measure(MeasureKind::Gamma, kM).value == doctest::Approx(1.0).epsilon(1e-12));

  const CopulaExpr lo = lower_t0();
  const CopulaExpr up = upper_t0();
  CHECK(measure(MeasureKind::Rho, lo).value == doctest::Approx(-0.8125).epsilon(1e-12));
  CHECK(measure(MeasureKind::Footrule, up).value == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(measure(MeasureKind::Gamma, lo).value == doctest::Approx(-0.625).epsilon(1e-12));
  CHECK(measure(MeasureKind::Tau, up).value == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(measure(MeasureKind::Beta, lo).value == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("Q is symmetric, monotone and survival-invariant on a spot-check family") {
  const CopulaExpr family[] = {kM, kW, kPi, lower_t0(), upper_t0()};
  for (const auto& a : family)
    for (const auto& b : family) {
      CHECK(concordance_q(a, b) == doctest::Approx(concordance_q(b, a)).epsilon(1e-10));
      CHECK(concordance_q(a, b) ==
            doctest::Approx(concordance_q(a.survival(), b.survival())).epsilon(1e-10));
    }
  for (const auto& e : {kM, kPi, kW}) {
    CHECK(concordance_q(e, kW) <= concordance_q(e, kM) + 1e-9);
    CHECK(concordance_q(e, lower_t0()) <= concordance_q(e, upper_t0()) + 1e-9);
  }
}

TEST_CASE("tau on mixtures is the bilinear expansion") {
  const CopulaExpr a = lower_t0();
  const CopulaExpr b = upper_t0();
  const double qaa = concordance_q(a, a);
  const double qab = concordance_q(a, b);
  const double qbb = concordance_q(b, b);
  for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
    const CopulaExpr mix = CopulaExpr::mixture({{alpha, a}, {1.0 - alpha, b}});
    const double direct = measure(MeasureKind::Tau, mix).value;
    const double bilinear =
        alpha * alpha * qaa + 2.0 * alpha * (1.0 - alpha) * qab + (1.0 - alpha) * (1.0 - alpha) * qbb;
    CHECK(direct == doctest::Approx(bilinear).epsilon(1e-10));
  }
}

TEST_CASE("mixtures containing the product copula integrate on both sides") {
  const CopulaExpr mix = CopulaExpr::mixture({{0.4, kPi}, {0.6, lower_t0()}});
  // Q(mix, M) by linearity in the integrating measure.
  const double expect_m = 0.4 * concordance_q(kPi, kM) + 0.6 * concordance_q(lower_t0(), kM);
  CHECK(concordance_q(mix, kM) == doctest::Approx(expect_m).epsilon(1e-12));
  // Both argument orders agree even though they run different integrators.
  CHECK(concordance_q(mix, kM) == doctest::Approx(concordance_q(kM, mix)).epsilon(1e-10));
  const double tau_mix = measure(MeasureKind::Tau, mix).value;
  const double bilinear = 0.4 * 0.4 * concordance_q(kPi, kPi) +
                          2 * 0.4 * 0.6 * concordance_q(kPi, lower_t0()) +
                          0.6 * 0.6 * concordance_q(lower_t0(), lower_t0());
  CHECK(tau_mix == doctest::Approx(bilinear).epsilon(1e-10));
}

TEST_CASE("measure values stay inside their ranges") {
  const CopulaExpr family[] = {kM, kW, kPi, lower_t0(), upper_t0()};
  for (const auto& c : family)
    for (MeasureKind k : kAllMeasures) {
      const double v = measure(k, c).value;
      CHECK(v >= measure_floor(k));
      CHECK(v <= 1.0);
    }
}

TEST_CASE("axiom_check on reference copulas") {
  const auto rho_report = axiom_check(MeasureKind::Rho, lower_t0(), 1e-9);
  CHECK(rho_report.all_pass());

  const auto beta_report = axiom_check(MeasureKind::Beta, upper_t0(), 1e-12);
  REQUIRE(beta_report.checks.size() == 4);
  CHECK(beta_report.checks[0].axiom == "transpose-invariance");
  CHECK(beta_report.checks[0].pass);

  const auto tau_report = axiom_check(MeasureKind::Tau, kPi, 1e-9);
  CHECK(tau_report.all_pass());

  CHECK_THROWS_AS(axiom_check(MeasureKind::Tau, kPi, 0.0), CopulaError);
}

TEST_CASE("property: Q stays exact on many-piece random shuffles") {
  SplitMix64 g(12345);
  auto random_shuffle = [&](int n) {
    std::vector<double> breaks{0.0};
    for (int i = 1; i < n; ++i) breaks.push_back(g.next_unit());
    breaks.push_back(1.0);
    std::sort(breaks.begin(), breaks.end());
    for (std::size_t i = 1; i < breaks.size(); ++i)
      if (breaks[i] - breaks[i - 1] < 1e-5) breaks[i] = std::min(1.0, breaks[i - 1] + 1e-5);
    breaks.back() = 1.0;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[static_cast<std::size_t>(g.next() % static_cast<std::uint64_t>(i + 1))]);
    std::vector<int> flips(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) flips[static_cast<std::size_t>(i)] = (g.next() & 1) ? 1 : -1;
    return CopulaExpr::shuffle(ShuffleOfM(breaks, perm, flips));
  };
  for (int rep = 0; rep < 6; ++rep) {
    const CopulaExpr a = random_shuffle(2 + static_cast<int>(g.next() % 40));
    const CopulaExpr b = random_shuffle(2 + static_cast<int>(g.next() % 40));
    const double qab = concordance_q(a, b);
    // The two argument orders subdivide along different paths yet must agree
    // to float precision, as must the survival-transformed pair.
    CHECK(std::abs(qab - concordance_q(b, a)) <= 1e-13);
    CHECK(std::abs(qab - concordance_q(a.survival(), b.survival())) <= 1e-13);
    CHECK(std::abs(concordance_q(a, kPi) - concordance_q(kPi, a)) <= 1e-13);
    const auto mc = mc_concordance_q(a, b, 200'000, 99);
    CHECK(std::abs(mc.mean - qab) <= std::max(4.0 * mc.std_error, 1e-4));
  }
}

TEST_CASE("axiom_check reports the footrule's reflection violation") {
  // phi(M) = 1 while phi(reflect(M)) = phi(W) = -1/2: a statistic with range
  // [-1/2, 1] cannot flip sign under reflection, and the report says so.
  const auto rep = axiom_check(MeasureKind::Footrule, kM, 1e-9);
  REQUIRE(rep.checks.size() == 4);
  CHECK(rep.checks[0].pass);        // transpose invariance
  CHECK_FALSE(rep.checks[1].pass);  // reflection sign flip
  CHECK(rep.checks[1].discrepancy == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(rep.checks[2].pass);
  CHECK(rep.checks[3].pass);  // kappa(Pi) = 0
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("measure name round trip") {
  for (MeasureKind k : kAllMeasures) CHECK(measure_from_name(measure_name(k)) == k);
  CHECK_THROWS_AS(measure_from_name("pearson"), CopulaError);
}
