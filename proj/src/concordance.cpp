#include "concord/concordance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace concord {

const char* measure_name(MeasureKind k) {
  switch (k) {
    case MeasureKind::Beta: return "beta";
    case MeasureKind::Rho: return "rho";
    case MeasureKind::Tau: return "tau";
    case MeasureKind::Footrule: return "footrule";
    case MeasureKind::Gamma: return "gamma";
  }
  return "?";
}

MeasureKind measure_from_name(const std::string& name) {
  for (MeasureKind k : kAllMeasures)
    if (name == measure_name(k)) return k;
  fail(Errc::OutOfRange, "unknown measure \"" + name + "\"");
}

double measure_floor(MeasureKind k) { return k == MeasureKind::Footrule ? -0.5 : -1.0; }

namespace {

// ---------------------------------------------------------------------------
// Exact integration of x -> C2(x, s(x)) along a support path.
//
// Between subdivision knots the integrand is polynomial of degree <= 2
// (degree <= 1 while C2 is piecewise linear, 2 when the product copula is
// involved), so Simpson's rule is exact per subinterval. The knots are the
// path breakpoints plus every crossing of C2's kink lines.
// ---------------------------------------------------------------------------

// Kink loci of a copula expression, as four line families in the unit square.
struct KinkLines {
  std::vector<double> verticals;      // u = p
  std::vector<double> horizontals;    // v = h
  std::vector<double> diagonals;      // v - u = d
  std::vector<double> antidiagonals;  // v + u = e
};

void collect_kinks(const CopulaExpr& c, KinkLines& k) {
  switch (c.tag()) {
    case CopulaExpr::Tag::FrechetUpper:
      k.diagonals.push_back(0.0);
      break;
    case CopulaExpr::Tag::FrechetLower:
      k.antidiagonals.push_back(1.0);
      break;
    case CopulaExpr::Tag::Product:
      break;
    case CopulaExpr::Tag::Shuffle: {
      const ShuffleOfM& s = c.as_shuffle();
      const int n = s.piece_count();
      for (int i = 1; i < n; ++i) k.verticals.push_back(s.breaks()[i]);
      for (int i = 0; i < n; ++i) {
        if (s.slot_start(i) > 0.0) k.horizontals.push_back(s.slot_start(i));
        if (s.flips()[i] > 0)
          k.diagonals.push_back(s.slot_start(i) - s.breaks()[i]);
        else
          k.antidiagonals.push_back(s.slot_start(i) + s.breaks()[i + 1]);
      }
      break;
    }
    case CopulaExpr::Tag::Mixture:
      for (const auto& t : c.terms()) collect_kinks(t.copula, k);
      break;
  }
}

// Knots closer than this are merged (duplicate crossings, float noise).
constexpr double kKnotMergeTol = 1e-14;

template <class F>
double simpson(const F& f, double a, double b) {
  return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

// Integrates f over [x0, x1] subdividing at the interior knots.
template <class F>
double integrate_with_knots(const F& f, double x0, double x1, std::vector<double>& knots) {
  std::sort(knots.begin(), knots.end());
  double total = 0.0;
  double left = x0;
  for (double x : knots) {
    if (x <= left + kKnotMergeTol || x >= x1 - kKnotMergeTol) continue;
    total += simpson(f, left, x);
    left = x;
  }
  total += simpson(f, left, x1);
  return total;
}

// Int_0^1 C2(x, s(x)) dx, exact. The path value uses the current piece's own
// line (not the right-continuous support map) so endpoint samples stay on the
// correct side of each breakpoint.
double path_integral(const ShuffleOfM& s, const CopulaExpr& c2) {
  KinkLines k;
  collect_kinks(c2, k);
  double total = 0.0;
  std::vector<double> knots;
  for (int i = 0; i < s.piece_count(); ++i) {
    const double x0 = s.breaks()[i];
    const double x1 = s.breaks()[i + 1];
    const double sigma = s.flips()[i] > 0 ? 1.0 : -1.0;
    const double a0 = s.flips()[i] > 0 ? s.slot_start(i) - x0 : s.slot_start(i) + x1;
    auto line = [&](double x) { return std::clamp(a0 + sigma * x, 0.0, 1.0); };
    auto f = [&](double x) { return c2.eval(x, line(x)); };

    knots.clear();
    for (double p : k.verticals) knots.push_back(p);
    for (double h : k.horizontals) knots.push_back(sigma * (h - a0));
    for (double d : k.diagonals)
      if (sigma < 0.0) knots.push_back(0.5 * (a0 - d));
    for (double e : k.antidiagonals)
      if (sigma > 0.0) knots.push_back(0.5 * (e - a0));
    total += integrate_with_knots(f, x0, x1, knots);
  }
  return total;
}

// Int over the unit square of a shuffle copula, via Fubini on
// C(u,v) = |{x<=u : r(x)<=v}|:  Int C du dv = Int_0^1 (1-x)(1-r(x)) dx.
double square_integral(const ShuffleOfM& r) {
  double total = 0.0;
  std::vector<double> none;
  for (int i = 0; i < r.piece_count(); ++i) {
    const double x0 = r.breaks()[i];
    const double x1 = r.breaks()[i + 1];
    const double sigma = r.flips()[i] > 0 ? 1.0 : -1.0;
    const double a0 = r.flips()[i] > 0 ? r.slot_start(i) - x0 : r.slot_start(i) + x1;
    auto f = [&](double x) { return (1.0 - x) * (1.0 - (a0 + sigma * x)); };
    none.clear();
    total += integrate_with_knots(f, x0, x1, none);
  }
  return total;
}

double product_first_q(const CopulaExpr& c2) {
  switch (c2.tag()) {
    case CopulaExpr::Tag::Product:
      return 0.0;  // 4 * Int uv du dv - 1 = 4/4 - 1
    case CopulaExpr::Tag::FrechetUpper:
      return 4.0 * square_integral(ShuffleOfM::identity()) - 1.0;
    case CopulaExpr::Tag::FrechetLower:
      return 4.0 * square_integral(ShuffleOfM::countermonotone()) - 1.0;
    case CopulaExpr::Tag::Shuffle:
      return 4.0 * square_integral(c2.as_shuffle()) - 1.0;
    case CopulaExpr::Tag::Mixture: {
      double acc = 0.0;
      for (const auto& t : c2.terms()) acc += t.weight * product_first_q(t.copula);
      return acc;
    }
  }
  fail(Errc::UnsupportedIntegrator, "unreachable expression tag");
}

ConcordanceValue checked_value(MeasureKind kind, double v) {
  const double lo = measure_floor(kind);
  if (!(v >= lo - 1e-9 && v <= 1.0 + 1e-9))
    fail(Errc::OutOfRange, std::string(measure_name(kind)) + " value escaped its range");
  return {std::clamp(v, lo, 1.0)};
}

const CopulaExpr& expr_m() {
  static const CopulaExpr c = CopulaExpr::frechet_upper();
  return c;
}
const CopulaExpr& expr_w() {
  static const CopulaExpr c = CopulaExpr::frechet_lower();
  return c;
}
const CopulaExpr& expr_pi() {
  static const CopulaExpr c = CopulaExpr::product();
  return c;
}

}  // namespace

double concordance_q(const CopulaExpr& c1, const CopulaExpr& c2) {
  switch (c1.tag()) {
    case CopulaExpr::Tag::Mixture: {
      double acc = 0.0;
      for (const auto& t : c1.terms()) acc += t.weight * concordance_q(t.copula, c2);
      return acc;
    }
    case CopulaExpr::Tag::FrechetUpper:
      return 4.0 * path_integral(ShuffleOfM::identity(), c2) - 1.0;
    case CopulaExpr::Tag::FrechetLower:
      return 4.0 * path_integral(ShuffleOfM::countermonotone(), c2) - 1.0;
    case CopulaExpr::Tag::Shuffle:
      return 4.0 * path_integral(c1.as_shuffle(), c2) - 1.0;
    case CopulaExpr::Tag::Product:
      return product_first_q(c2);
  }
  fail(Errc::UnsupportedIntegrator, "unreachable expression tag");
}

ConcordanceValue measure(MeasureKind kind, const CopulaExpr& c) {
  switch (kind) {
    case MeasureKind::Beta:
      return checked_value(kind, 4.0 * c.eval(0.5, 0.5) - 1.0);
    case MeasureKind::Rho:
      return checked_value(kind, 3.0 * concordance_q(c, expr_pi()));
    case MeasureKind::Tau:
      return checked_value(kind, concordance_q(c, c));
    case MeasureKind::Footrule:
      return checked_value(kind, 0.5 * (3.0 * concordance_q(c, expr_m()) - 1.0));
    case MeasureKind::Gamma:
      return checked_value(kind, concordance_q(c, expr_m()) + concordance_q(c, expr_w()));
  }
  fail(Errc::OutOfRange, "unreachable measure kind");
}

namespace {

// c1 decomposed for sampling: component shuffles with cumulative weights.
struct SampledCopula {
  std::vector<ShuffleOfM> parts;
  std::vector<double> cum;  // empty when there is a single component
};

void add_part(const CopulaExpr& c, SampledCopula& out) {
  switch (c.tag()) {
    case CopulaExpr::Tag::FrechetUpper:
      out.parts.push_back(ShuffleOfM::identity());
      break;
    case CopulaExpr::Tag::FrechetLower:
      out.parts.push_back(ShuffleOfM::countermonotone());
      break;
    case CopulaExpr::Tag::Shuffle:
      out.parts.push_back(c.as_shuffle());
      break;
    default:
      fail(Errc::UnsupportedIntegrator,
           "mc sampling requires M, W, a shuffle, or a mixture of those");
  }
}

SampledCopula sampled_form(const CopulaExpr& c) {
  SampledCopula out;
  if (c.is_mixture()) {
    double acc = 0.0;
    for (const auto& t : c.terms()) {
      add_part(t.copula, out);
      acc += t.weight;
      out.cum.push_back(acc);
    }
    out.cum.back() = 1.0;
  } else {
    add_part(c, out);
  }
  return out;
}

McEstimate finish(double s1, double s2, std::int64_t count, std::uint64_t seed) {
  const double n = static_cast<double>(count);
  const double mean = s1 / n;
  const double var = std::max(0.0, (s2 - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n), count, seed};
}

// Shared block-parallel driver: `draw` maps one generator draw to one
// transformed sample y.
template <class Draw>
McEstimate mc_blocks(std::int64_t count, std::uint64_t seed, Exec exec, const Draw& draw) {
  const std::int64_t nb = (count + kSampleBlock - 1) / kSampleBlock;
  std::vector<double> sum(static_cast<std::size_t>(nb), 0.0);
  std::vector<double> sumsq(static_cast<std::size_t>(nb), 0.0);
  auto run_block = [&](std::int64_t b) {
    SplitMix64 g(block_seed(seed, static_cast<std::uint64_t>(b)));
    const std::int64_t hi = std::min(count, (b + 1) * kSampleBlock);
    double s1 = 0.0, s2 = 0.0;
    for (std::int64_t i = b * kSampleBlock; i < hi; ++i) {
      const double y = draw(g);
      s1 += y;
      s2 += y * y;
    }
    sum[static_cast<std::size_t>(b)] = s1;
    sumsq[static_cast<std::size_t>(b)] = s2;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b) run_block(b);
  } else {
    for (std::int64_t b = 0; b < nb; ++b) run_block(b);
  }
  double s1 = 0.0, s2 = 0.0;
  for (std::int64_t b = 0; b < nb; ++b) {
    s1 += sum[static_cast<std::size_t>(b)];
    s2 += sumsq[static_cast<std::size_t>(b)];
  }
  return finish(s1, s2, count, seed);
}

}  // namespace

McEstimate mc_concordance_q(const CopulaExpr& c1, const CopulaExpr& c2, std::int64_t count,
                            std::uint64_t seed, Exec exec) {
  if (count < 1000) fail(Errc::OutOfRange, "mc_concordance_q requires count >= 1000");
  const SampledCopula sc = sampled_form(c1);
  if (sc.cum.empty()) {
    // Single support: identical stream to the multi-spec kernel.
    McSpec spec{&sc.parts.front(), &c2};
    return mc_run(std::span<const McSpec>(&spec, 1), count, seed, exec).front();
  }
  // Mixture: each draw consumes u, then a component selector.
  return mc_blocks(count, seed, exec, [&](SplitMix64& g) {
    const double u = g.next_unit();
    const double z = g.next_unit();
    const std::size_t k = static_cast<std::size_t>(
        std::upper_bound(sc.cum.begin(), sc.cum.end(), z) - sc.cum.begin());
    const ShuffleOfM& s = sc.parts[std::min(k, sc.parts.size() - 1)];
    return 4.0 * c2.eval(u, s.support(u)) - 1.0;
  });
}

McEstimate mc_measure(MeasureKind kind, const CopulaExpr& c, std::int64_t count,
                      std::uint64_t seed, Exec exec) {
  if (count < 1000) fail(Errc::OutOfRange, "mc_measure requires count >= 1000");
  const SampledCopula sc = sampled_form(c);
  if (!sc.cum.empty())
    fail(Errc::UnsupportedIntegrator, "mc_measure supports single-support copulas only");
  const ShuffleOfM& s = sc.parts.front();
  return mc_blocks(count, seed, exec, [&](SplitMix64& g) {
    const double u = g.next_unit();
    const double v = s.support(u);
    switch (kind) {
      case MeasureKind::Beta:
        return (u <= 0.5 && v <= 0.5) ? 3.0 : -1.0;  // 4*indicator - 1
      case MeasureKind::Rho:
        return 3.0 * (4.0 * u * v - 1.0);
      case MeasureKind::Tau:
        return 4.0 * c.eval(u, v) - 1.0;
      case MeasureKind::Footrule:
        return 0.5 * (3.0 * (4.0 * frechet_upper_value(u, v) - 1.0) - 1.0);
      case MeasureKind::Gamma:
        return 4.0 * (frechet_upper_value(u, v) + frechet_lower_value(u, v)) - 2.0;
    }
    return 0.0;  // unreachable
  });
}

namespace {

// Fenwick tree for inversion counting.
class BitCounter {
 public:
  explicit BitCounter(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}
  void add(int i) {
    for (++i; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[static_cast<std::size_t>(i)];
  }
  std::int64_t count_le(int i) const {
    std::int64_t c = 0;
    for (++i; i > 0; i -= i & -i) c += tree_[static_cast<std::size_t>(i)];
    return c;
  }

 private:
  std::vector<std::int64_t> tree_;
};

std::vector<int> rank_order(std::span<const SamplePoint> pts, bool by_u) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const double xa = by_u ? pts[static_cast<std::size_t>(a)].u : pts[static_cast<std::size_t>(a)].v;
    const double xb = by_u ? pts[static_cast<std::size_t>(b)].u : pts[static_cast<std::size_t>(b)].v;
    return xa < xb || (xa == xb && a < b);  // ties broken by index order
  });
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r;
  return rank;
}

}  // namespace

std::map<MeasureKind, double> empirical_measures(std::span<const SamplePoint> points) {
  const int n = static_cast<int>(points.size());
  if (n < 10) fail(Errc::TooFewPoints, "empirical measures need at least 10 points");

  const std::vector<int> ru = rank_order(points, true);
  const std::vector<int> rv = rank_order(points, false);

  // v-ranks visited in u-order; discordant pairs are exactly the inversions.
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(ru[static_cast<std::size_t>(i)])] = rv[static_cast<std::size_t>(i)];
  BitCounter bit(n);
  std::int64_t inversions = 0;
  for (int i = 0; i < n; ++i) {
    inversions += i - bit.count_le(seq[static_cast<std::size_t>(i)]);
    bit.add(seq[static_cast<std::size_t>(i)]);
  }
  const double pairs = 0.5 * static_cast<double>(n) * (n - 1);
  const double tau = (pairs - 2.0 * static_cast<double>(inversions)) / pairs;

  // Pearson correlation of the (distinct) rank vectors.
  long double cross = 0.0L;
  for (int i = 0; i < n; ++i)
    cross += static_cast<long double>(ru[static_cast<std::size_t>(i)] + 1) *
             static_cast<long double>(rv[static_cast<std::size_t>(i)] + 1);
  const long double nn = n;
  const long double mean_rank = 0.5L * (nn + 1.0L);
  const long double denom = nn * (nn * nn - 1.0L) / 12.0L;
  const double rho = static_cast<double>((cross - nn * mean_rank * mean_rank) / denom);

  // Quadrant statistic at the lower sample medians.
  std::vector<double> us, vs;
  us.reserve(static_cast<std::size_t>(n));
  vs.reserve(static_cast<std::size_t>(n));
  for (const auto& p : points) {
    us.push_back(p.u);
    vs.push_back(p.v);
  }
  const auto mid = static_cast<std::size_t>((n - 1) / 2);
  std::nth_element(us.begin(), us.begin() + static_cast<std::ptrdiff_t>(mid), us.end());
  std::nth_element(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(mid), vs.end());
  const double mu = us[mid], mv = vs[mid];
  std::int64_t both = 0;
  for (const auto& p : points)
    if (p.u <= mu && p.v <= mv) ++both;
  const double beta = 4.0 * static_cast<double>(both) / static_cast<double>(n) - 1.0;

  return {{MeasureKind::Tau, tau}, {MeasureKind::Rho, rho}, {MeasureKind::Beta, beta}};
}

bool AxiomReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

AxiomReport axiom_check(MeasureKind kind, const CopulaExpr& c, double tol) {
  if (!(tol > 0.0)) fail(Errc::OutOfRange, "tolerance must be positive");
  const double k0 = measure(kind, c).value;
  const double kt = measure(kind, c.transposed()).value;
  const double k1 = measure(kind, c.reflected(CopulaExpr::Axis::First)).value;
  const double k2 = measure(kind, c.reflected(CopulaExpr::Axis::Second)).value;
  const double kp = measure(kind, expr_pi()).value;
  AxiomReport report{kind, tol, {}, };
  auto add = [&](const char* name, double disc) {
    report.checks.push_back({name, disc, disc <= tol});
  };
  add("transpose-invariance", std::abs(k0 - kt));
  add("reflection-sign-flip-first", std::abs(k1 + k0));
  add("reflection-sign-flip-second", std::abs(k2 + k0));
  add("independence-zero", std::abs(kp));
  return report;
}

}  // namespace concord
