#pragma once

#include <map>
#include <string>

#include "concord/copula.hpp"
#include "concord/sampling.hpp"

namespace concord {

/// The five measures of concordance handled by this library.
enum class MeasureKind { Beta, Rho, Tau, Footrule, Gamma };

inline constexpr MeasureKind kAllMeasures[] = {MeasureKind::Beta, MeasureKind::Rho,
                                               MeasureKind::Tau, MeasureKind::Footrule,
                                               MeasureKind::Gamma};

const char* measure_name(MeasureKind k);
MeasureKind measure_from_name(const std::string& name);  // throws OutOfRange

/// Attainable range of a measure: [-1,1] for all, except the footrule whose
/// lower end is -1/2.
double measure_floor(MeasureKind k);

/// A measure value, checked against the measure's range (with ulp-scale slack
/// for integration roundoff, then clamped into the exact range).
struct ConcordanceValue {
  double value;
};

/// The concordance functional Q(C1, C2) = 4 * Int C2 dC1 - 1, evaluated
/// exactly for every pair in the expression set:
///  - mixture C1: expanded by linearity of the integral in dC1;
///  - M, W and shuffle C1: the measure dC1 lives on the support path, so
///    Q = 4 * Int_0^1 C2(x, s(x)) dx - 1; the integrand is piecewise
///    polynomial of degree <= 2, subdivided at the path breakpoints and at
///    every crossing of C2's kink lines (found by solving linear equations
///    piece against piece), then integrated with Simpson's rule, which is
///    exact at that degree;
///  - product C1: Fubini on C2(u,v) = |{x<=u : r(x)<=v}| reduces the square
///    integral to Int_0^1 (1-x)(1-r(x)) dx, again Simpson-exact per piece
///    (and Int uv du dv = 1/4 when C2 is the product copula).
double concordance_q(const CopulaExpr& c1, const CopulaExpr& c2);

/// Evaluates a measure of concordance:
///   beta     4 C(1/2,1/2) - 1            (pointwise, no integration)
///   rho      3 Q(C, Pi)
///   tau      Q(C, C)
///   footrule (3 Q(C, M) - 1) / 2
///   gamma    Q(C, M) + Q(C, W)
/// Mixture inputs expand through the bilinearity of Q.
ConcordanceValue measure(MeasureKind kind, const CopulaExpr& c);

/// Monte Carlo estimate of Q(c1, c2) via Q = 4 E[C2(U, s(U))] - 1 with U
/// uniform; c1 must be M, W, a shuffle, or a mixture of those (a mixture draws
/// its component per sample with a second uniform, after u). Deterministic per
/// (count, seed); std_error is the sample standard error of the transformed
/// draws. Requires count >= 1000.
McEstimate mc_concordance_q(const CopulaExpr& c1, const CopulaExpr& c2, std::int64_t count,
                            std::uint64_t seed, Exec exec = Exec::Parallel);

/// Single-pass Monte Carlo estimate of a measure on a shuffle-backed copula
/// (same sampling kernel; the per-draw transform matches the measure's
/// definition, with beta estimated by the center quadrant indicator).
McEstimate mc_measure(MeasureKind kind, const CopulaExpr& c, std::int64_t count,
                      std::uint64_t seed, Exec exec = Exec::Parallel);

/// Rank statistics of a point cloud (ties broken by index order):
///   tau   (concordant - discordant) / (n choose 2)
///   rho   Pearson correlation of the rank vectors
///   beta  4 * (fraction with both coordinates <= their sample medians) - 1
/// Requires n >= 10 (TooFewPoints otherwise). O(n log n).
std::map<MeasureKind, double> empirical_measures(std::span<const SamplePoint> points);

/// Per-copula measure-of-concordance axiom instances, checked at tolerance
/// `tol`: transpose invariance, sign flip under both reflections, and
/// kappa(Pi) = 0. (Monotonicity and continuity are suite-level properties and
/// are exercised by the test suite, not per copula.)
struct AxiomCheck {
  std::string axiom;
  double discrepancy;
  bool pass;
};

struct AxiomReport {
  MeasureKind kind;
  double tolerance;
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
};

AxiomReport axiom_check(MeasureKind kind, const CopulaExpr& c, double tol);

}  // namespace concord
