#pragma once

#include <vector>

#include "concord/shuffle.hpp"

namespace concord {

struct MixtureTerm;

/// The closed set of evaluable copulas: the Fréchet–Hoeffding bounds M and W,
/// the product copula Pi, shuffles of M, and finite convex mixtures of these.
/// Mixtures are flattened at construction (no nested mixtures) and weights
/// must be nonnegative and sum to 1 within 1e-12.
///
/// Values are immutable; every operation is a pure function of its inputs.
class CopulaExpr {
 public:
  enum class Tag { FrechetUpper, FrechetLower, Product, Shuffle, Mixture };

  using Term = MixtureTerm;

  static CopulaExpr frechet_upper();  // M(u,v) = min(u,v)
  static CopulaExpr frechet_lower();  // W(u,v) = max(0, u+v-1)
  static CopulaExpr product();        // Pi(u,v) = uv
  static CopulaExpr shuffle(ShuffleOfM s);
  static CopulaExpr mixture(std::vector<Term> terms);

  Tag tag() const { return tag_; }
  bool is_mixture() const { return tag_ == Tag::Mixture; }

  /// Valid only when tag() == Tag::Shuffle.
  const ShuffleOfM& as_shuffle() const { return shuffles_.front(); }

  /// Valid only when tag() == Tag::Mixture; terms are never mixtures.
  const std::vector<Term>& terms() const { return terms_; }

  double eval(UnitValue u, UnitValue v) const;

  CopulaExpr transposed() const;

  enum class Axis { First, Second };
  CopulaExpr reflected(Axis axis) const;

  CopulaExpr survival() const;

 private:
  explicit CopulaExpr(Tag tag) : tag_(tag) {}

  Tag tag_;
  std::vector<ShuffleOfM> shuffles_;  // singleton when tag_ == Shuffle
  std::vector<Term> terms_;           // populated when tag_ == Mixture
};

struct MixtureTerm {
  double weight;
  CopulaExpr copula;
};

/// M, W and Pi as closed forms (used for direct evaluation and as oracles).
inline double frechet_upper_value(double u, double v) { return u < v ? u : v; }
inline double frechet_lower_value(double u, double v) {
  double w = u + v - 1.0;
  return w > 0.0 ? w : 0.0;
}
inline double product_value(double u, double v) { return u * v; }

}  // namespace concord
