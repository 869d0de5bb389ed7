#include "concord/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace concord {

double max_asymmetry(UnitValue u, UnitValue v) {
  const double uu = u, vv = v;
  return std::min({uu, vv, 1.0 - uu, 1.0 - vv, std::abs(vv - uu)});
}

namespace {

void check_admissible(const BoundParams& p) {
  UnitValue{p.a};
  UnitValue{p.b};
  const double cap = frechet_upper_value(p.a, p.b) - frechet_lower_value(p.a, p.b);
  if (!(p.c >= 0.0) || p.c > cap + 1e-12)
    fail(Errc::InadmissibleC, "offset c must lie in [0, M(a,b)-W(a,b)]");
}

// Builds a shuffle from a raw 4-piece description, dropping zero-width pieces
// and reindexing the surviving slots.
ShuffleOfM build_shuffle(const std::array<double, 5>& raw_breaks, const std::array<int, 4>& slots,
                         int flip) {
  std::vector<double> breaks{0.0};
  std::vector<int> kept_slots;
  double prev = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double next = std::clamp(raw_breaks[static_cast<std::size_t>(i) + 1], prev, 1.0);
    if (next - prev > 1e-15) {
      breaks.push_back(next);
      kept_slots.push_back(slots[static_cast<std::size_t>(i)]);
      prev = next;
    }
  }
  breaks.back() = 1.0;
  // Slot labels of survivors, compressed to ranks 1..m.
  std::vector<int> sorted = kept_slots;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> perm;
  perm.reserve(kept_slots.size());
  for (int s : kept_slots)
    perm.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s) -
                                    sorted.begin()) +
                   1);
  std::vector<int> flips(kept_slots.size(), flip);
  return ShuffleOfM(std::move(breaks), std::move(perm), std::move(flips));
}

}  // namespace

ShuffleOfM lower_bound_copula(const BoundParams& p) {
  check_admissible(p);
  const double d1 = std::clamp(p.d1(), frechet_lower_value(p.a, p.b),
                               frechet_upper_value(p.a, p.b));
  return build_shuffle({0.0, p.a - d1, p.a, 1.0 - p.b + d1, 1.0}, {4, 2, 3, 1}, -1);
}

ShuffleOfM upper_bound_copula(const BoundParams& p) {
  check_admissible(p);
  const double d2 = std::clamp(p.d2(), frechet_lower_value(p.a, p.b),
                               frechet_upper_value(p.a, p.b));
  return build_shuffle({0.0, d2, p.b, p.a + p.b - d2, 1.0}, {1, 3, 2, 4}, 1);
}

double lower_bound_value(const BoundParams& p, UnitValue u, UnitValue v) {
  const double uu = u, vv = v, d1 = p.d1();
  const double plateau =
      std::min({d1, uu - p.a + d1, vv - p.b + d1, uu + vv - p.a - p.b + d1});
  return std::max(frechet_lower_value(uu, vv), plateau);
}

double upper_bound_value(const BoundParams& p, UnitValue u, UnitValue v) {
  const double uu = u, vv = v, d2 = p.d2();
  const double plateau =
      std::max({d2, uu - p.b + d2, vv - p.a + d2, uu + vv - p.a - p.b + d2});
  return std::min(frechet_upper_value(uu, vv), plateau);
}

std::pair<ShuffleOfM, ShuffleOfM> beta_bound_copulas(BetaParam t) {
  return {lower_bound_copula({0.5, 0.5, 0.25 * (1.0 + t)}),
          upper_bound_copula({0.5, 0.5, 0.25 * (1.0 - t)})};
}

double closed_form_q(BoundQ which, const BoundParams& p) {
  check_admissible(p);
  const double a = p.a, b = p.b, d1 = p.d1(), d2 = p.d2();
  switch (which) {
    case BoundQ::WWithLower:
    case BoundQ::LowerWithLower:
      return 4.0 * d1 * (1.0 - a - b + d1) - 1.0;
    case BoundQ::PiWithLower:
      return 2.0 * d1 * (1.0 - a - b + d1) * (1.0 - a - b + 2.0 * d1) - 1.0 / 3.0;
    case BoundQ::WWithUpper: {
      const double dom = std::min({1.0 - a, 1.0 - b, 2.0 * a + b - 1.0, a + 2.0 * b - 1.0});
      if (d2 > dom)
        fail(Errc::ConditionViolated,
             "closed form for Q(W, upper) requires d2 <= min{1-a, 1-b, 2a+b-1, a+2b-1}");
      return (a - 1.0) * (a - 1.0) + (b - 1.0) * (b - 1.0) + 2.0 * d2 * (a + b - d2) - 1.0;
    }
    case BoundQ::PiWithUpper:
      return 1.0 / 3.0 - 2.0 * (a + b - 2.0 * d2) * (a - d2) * (b - d2);
    case BoundQ::UpperWithUpper:
    case BoundQ::MWithUpper:
      return 1.0 - 4.0 * (a - d2) * (b - d2);
  }
  fail(Errc::OutOfRange, "unreachable closed form");
}

double envelope_value(MeasureKind kind, Side side, BetaParam t) {
  if (kind == MeasureKind::Beta) fail(Errc::OutOfRange, "no envelope for beta against itself");
  const double s = side == Side::Lower ? 1.0 + t : 1.0 - t;
  double v = 0.0;
  switch (kind) {
    case MeasureKind::Rho:
      v = 3.0 / 16.0 * s * s * s - 1.0;
      break;
    case MeasureKind::Tau:
      v = 0.25 * s * s - 1.0;
      break;
    case MeasureKind::Footrule:
      v = side == Side::Lower ? 3.0 / 16.0 * s * s - 0.5 : 3.0 / 8.0 * s * s - 1.0;
      break;
    case MeasureKind::Gamma:
      v = 3.0 / 8.0 * s * s - 1.0;
      break;
    case MeasureKind::Beta:
      break;  // rejected above
  }
  return side == Side::Lower ? v : -v;
}

std::pair<double, double> beta_interval(MeasureKind kind, double value) {
  if (kind == MeasureKind::Beta) fail(Errc::OutOfRange, "no beta interval for beta itself");
  const double lo_range = measure_floor(kind);
  if (!(value >= lo_range - 1e-12 && value <= 1.0 + 1e-12))
    fail(Errc::OutOfRange, std::string(measure_name(kind)) + " value outside its range");
  value = std::clamp(value, lo_range, 1.0);
  double lo = -1.0, hi = 1.0;
  switch (kind) {
    case MeasureKind::Rho:
      if (value > -0.5) lo = 1.0 - 2.0 * std::cbrt(2.0 * (1.0 - value) / 3.0);
      if (value < 0.5) hi = -1.0 + 2.0 * std::cbrt(2.0 * (1.0 + value) / 3.0);
      break;
    case MeasureKind::Tau:
      if (value > 0.0) lo = 1.0 - 2.0 * std::sqrt(1.0 - value);
      if (value < 0.0) hi = -1.0 + 2.0 * std::sqrt(1.0 + value);
      break;
    case MeasureKind::Footrule:
      lo = 1.0 - 4.0 * std::sqrt((1.0 - value) / 6.0);
      if (value < 0.25) hi = -1.0 + 4.0 * std::sqrt((1.0 + 2.0 * value) / 6.0);
      break;
    case MeasureKind::Gamma:
      if (value > -0.5) lo = 1.0 - 2.0 * std::sqrt(2.0 * (1.0 - value) / 3.0);
      if (value < 0.5) hi = -1.0 + 2.0 * std::sqrt(2.0 * (1.0 + value) / 3.0);
      break;
    case MeasureKind::Beta:
      break;  // rejected above
  }
  lo = std::clamp(lo, -1.0, 1.0);
  hi = std::clamp(hi, -1.0, 1.0);
  return {lo, hi};
}

}  // namespace concord
