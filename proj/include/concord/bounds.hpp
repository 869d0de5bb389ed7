#pragma once

#include <utility>

#include "concord/concordance.hpp"
#include "concord/shuffle.hpp"

namespace concord {

/// Largest possible |C(u,v) - C(v,u)| over all copulas at a fixed point:
/// min{u, v, 1-u, 1-v, |v-u|}. Takes values in [0, 1/3].
double max_asymmetry(UnitValue u, UnitValue v);

/// Parameters of the extremal copulas: corner (a,b) and offset c. The derived
/// mass levels d1 = W(a,b)+c and d2 = M(a,b)-c are always recomputed, never
/// stored. Constructible for 0 <= c <= M(a,b)-W(a,b) (the range over which the
/// shuffle partitions below exist); beyond that the constructors throw
/// InadmissibleC.
struct BoundParams {
  double a;
  double b;
  double c;

  double d1() const { return frechet_lower_value(a, b) + c; }
  double d2() const { return frechet_upper_value(a, b) - c; }
};

/// The pointwise-smallest copula with C(a,b) = W(a,b)+c:
///   max{W(u,v), min{d1, u-a+d1, v-b+d1, u+v-a-b+d1}}
/// as a 4-piece shuffle (partition {a-d1, a, 1-b+d1}, slots (4,2,3,1), all
/// slopes -1); zero-width pieces are dropped and the slots reindexed.
ShuffleOfM lower_bound_copula(const BoundParams& p);

/// The pointwise-largest copula with C(b,a) = M(a,b)-c:
///   min{M(u,v), max{d2, u-b+d2, v-a+d2, u+v-a-b+d2}}
/// as a 4-piece shuffle (partition {d2, b, a+b-d2}, slots (1,3,2,4), all
/// slopes +1).
ShuffleOfM upper_bound_copula(const BoundParams& p);

/// The closed forms above, evaluated directly (cross-check oracles for the
/// shuffle construction).
double lower_bound_value(const BoundParams& p, UnitValue u, UnitValue v);
double upper_bound_value(const BoundParams& p, UnitValue u, UnitValue v);

/// A beta level: a real in [-1,1]. Rejects anything else (with an ulp of
/// slack for values arriving through float arithmetic, which are clamped).
class BetaParam {
 public:
  BetaParam(double t) : t_(t) {  // NOLINT: implicit by design
    if (!(t >= -1.0 - 1e-12 && t <= 1.0 + 1e-12))
      fail(Errc::OutOfRange, "beta level outside [-1,1]");
    t_ = t < -1.0 ? -1.0 : (t > 1.0 ? 1.0 : t);
  }
  operator double() const { return t_; }

 private:
  double t_;
};

/// Extremal copulas of the set {C : beta(C) = t}: the lower bound is the
/// (1/2, 1/2, (1+t)/4) lower copula, the upper is the (1/2, 1/2, (1-t)/4)
/// upper copula; both take the value (1+t)/4 at the center.
std::pair<ShuffleOfM, ShuffleOfM> beta_bound_copulas(BetaParam t);

/// Closed-form concordance values available for the extremal copulas. Named
/// by the pair they evaluate; "Lower"/"Upper" are the bound copulas above.
enum class BoundQ {
  WWithLower,      // 4 d1 (1-a-b+d1) - 1
  PiWithLower,     // 2 d1 (1-a-b+d1)(1-a-b+2 d1) - 1/3
  LowerWithLower,  // 4 d1 (1-a-b+d1) - 1
  WWithUpper,      // (a-1)^2 + (b-1)^2 + 2 d2 (a+b-d2) - 1, under its domain condition
  PiWithUpper,     // 1/3 - 2 (a+b-2 d2)(a-d2)(b-d2)
  UpperWithUpper,  // 1 - 4 (a-d2)(b-d2)
  MWithUpper,      // 1 - 4 (a-d2)(b-d2)
};

/// Evaluates one of the closed forms. WWithUpper is only stated for
/// d2 <= min{1-a, 1-b, 2a+b-1, a+2b-1} and throws ConditionViolated outside
/// that domain (callers may fall back to concordance_q).
double closed_form_q(BoundQ which, const BoundParams& p);

enum class Side { Lower, Upper };

/// Closed-form extreme value of a measure over {C : beta(C) = t}:
///   rho      lower  3(1+t)^3/16 - 1      upper  1 - 3(1-t)^3/16
///   tau      lower  (1+t)^2/4 - 1        upper  1 - (1-t)^2/4
///   footrule lower  3(1+t)^2/16 - 1/2    upper  1 - 3(1-t)^2/8
///   gamma    lower  3(1+t)^2/8 - 1       upper  1 - 3(1-t)^2/8
/// `kind` must not be Beta.
double envelope_value(MeasureKind kind, Side side, BetaParam t);

/// One envelope as a callable closed-form generator t -> value.
struct Envelope {
  MeasureKind kind;
  Side side;
  double operator()(BetaParam t) const { return envelope_value(kind, side, t); }
};

/// Closed interval of beta values compatible with a given measure value (the
/// envelope inverses, with their threshold branches: rho and gamma saturate at
/// -+1/2, tau at 0, the footrule's upper branch at 1/4). Throws OutOfRange if
/// `value` is outside the measure's attainable range.
std::pair<double, double> beta_interval(MeasureKind kind, double value);

}  // namespace concord
