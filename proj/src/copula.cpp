#include "concord/copula.hpp"

#include <cmath>
#include <utility>

namespace concord {

CopulaExpr CopulaExpr::frechet_upper() { return CopulaExpr(Tag::FrechetUpper); }
CopulaExpr CopulaExpr::frechet_lower() { return CopulaExpr(Tag::FrechetLower); }
CopulaExpr CopulaExpr::product() { return CopulaExpr(Tag::Product); }

CopulaExpr CopulaExpr::shuffle(ShuffleOfM s) {
  CopulaExpr c(Tag::Shuffle);
  c.shuffles_.push_back(std::move(s));
  return c;
}

CopulaExpr CopulaExpr::mixture(std::vector<Term> terms) {
  CopulaExpr c(Tag::Mixture);
  double total = 0.0;
  for (auto& t : terms) {
    if (!(t.weight >= 0.0) || !std::isfinite(t.weight))
      fail(Errc::BadMixtureWeights, "mixture weights must be nonnegative");
    total += t.weight;
    if (t.copula.is_mixture()) {
      for (auto& inner : t.copula.terms_)
        c.terms_.push_back({t.weight * inner.weight, inner.copula});
    } else {
      c.terms_.push_back(std::move(t));
    }
  }
  if (std::abs(total - 1.0) > 1e-12)
    fail(Errc::BadMixtureWeights, "mixture weights must sum to 1 within 1e-12");
  return c;
}

double CopulaExpr::eval(UnitValue u, UnitValue v) const {
  switch (tag_) {
    case Tag::FrechetUpper:
      return frechet_upper_value(u, v);
    case Tag::FrechetLower:
      return frechet_lower_value(u, v);
    case Tag::Product:
      return product_value(u, v);
    case Tag::Shuffle:
      return shuffles_.front().eval(u, v);
    case Tag::Mixture: {
      double acc = 0.0;
      for (const auto& t : terms_) acc += t.weight * t.copula.eval(u, v);
      return acc;
    }
  }
  return 0.0;  // unreachable
}

CopulaExpr CopulaExpr::transposed() const {
  switch (tag_) {
    case Tag::FrechetUpper:
    case Tag::FrechetLower:
    case Tag::Product:
      return *this;
    case Tag::Shuffle:
      return shuffle(shuffles_.front().transposed());
    case Tag::Mixture: {
      std::vector<Term> ts;
      ts.reserve(terms_.size());
      for (const auto& t : terms_) ts.push_back({t.weight, t.copula.transposed()});
      return mixture(std::move(ts));
    }
  }
  return *this;  // unreachable
}

CopulaExpr CopulaExpr::reflected(Axis axis) const {
  switch (tag_) {
    case Tag::FrechetUpper:
      return frechet_lower();
    case Tag::FrechetLower:
      return frechet_upper();
    case Tag::Product:
      return *this;
    case Tag::Shuffle:
      return shuffle(axis == Axis::First ? shuffles_.front().reflected_first()
                                         : shuffles_.front().reflected_second());
    case Tag::Mixture: {
      std::vector<Term> ts;
      ts.reserve(terms_.size());
      for (const auto& t : terms_) ts.push_back({t.weight, t.copula.reflected(axis)});
      return mixture(std::move(ts));
    }
  }
  return *this;  // unreachable
}

CopulaExpr CopulaExpr::survival() const {
  switch (tag_) {
    case Tag::FrechetUpper:
    case Tag::FrechetLower:
    case Tag::Product:
      return *this;
    case Tag::Shuffle:
      return shuffle(shuffles_.front().survival());
    case Tag::Mixture: {
      std::vector<Term> ts;
      ts.reserve(terms_.size());
      for (const auto& t : terms_) ts.push_back({t.weight, t.copula.survival()});
      return mixture(std::move(ts));
    }
  }
  return *this;  // unreachable
}

}  // namespace concord
