#pragma once

#include <cmath>

#include "concord/errors.hpp"

namespace concord {

/// A real number constrained to [0,1]. Construction rejects anything else,
/// including NaN, so a UnitValue in hand is always a valid copula argument.
class UnitValue {
 public:
  UnitValue(double x) : x_(x) {  // NOLINT: implicit by design, validates at the boundary
    if (!(x >= 0.0 && x <= 1.0)) fail(Errc::OutOfRange, "value outside [0,1]");
  }

  operator double() const { return x_; }
  double value() const { return x_; }

 private:
  double x_;
};

}  // namespace concord
