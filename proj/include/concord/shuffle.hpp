#pragma once

#include <vector>

#include "concord/unit_value.hpp"

namespace concord {

/// A shuffle of M: the singular copula obtained by cutting the unit interval
/// into n pieces at `breaks` (s_0=0 < s_1 < ... < s_n = 1), stacking piece i
/// into the perm[i]-th vertical slot (1-based, counted from the bottom; slot
/// heights equal the widths of the pieces they receive), and laying mass along
/// a segment of slope flips[i] (+1 or -1) inside that piece x slot rectangle.
///
/// The induced support map u -> support(u) is a measure-preserving piecewise
/// linear bijection of [0,1] up to the finitely many breakpoints; the copula
/// value C(u,v) is the Lebesgue measure of {x <= u : support(x) <= v}.
///
/// Immutable after construction; all methods are const and thread-safe.
class ShuffleOfM {
 public:
  /// Validates and builds. Throws CopulaError with code:
  ///  - BadEndpoints       breaks do not start at exactly 0 / end at exactly 1
  ///  - NonMonotoneBreaks  breaks not strictly increasing or non-finite
  ///  - BadPermutation     perm is not a bijection of {1..n}
  ///  - BadFlipCount       flips has the wrong length or entries not in {-1,+1}
  ShuffleOfM(std::vector<double> breaks, std::vector<int> perm, std::vector<int> flips);

  int piece_count() const { return static_cast<int>(perm_.size()); }
  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& flips() const { return flips_; }

  /// Lower v-endpoint of the image slot of piece i (0-based).
  double slot_start(int i) const { return slot_start_[i]; }
  double piece_width(int i) const { return breaks_[i + 1] - breaks_[i]; }

  /// The a.e. support map. Interior breakpoints resolve right-continuously;
  /// u = 1 uses the last piece. Result clamped to [0,1].
  double support(UnitValue u) const;

  /// C(u,v) through the path measure: |{x in [0,u] : support(x) <= v}|.
  double eval(UnitValue u, UnitValue v) const;

  /// (u,v) -> C(v,u). The transpose of a shuffle is again a shuffle (the
  /// inverse rearrangement).
  ShuffleOfM transposed() const;

  /// First-axis reflection, (u,v) -> v - C(1-u, v).
  ShuffleOfM reflected_first() const;

  /// Second-axis reflection, (u,v) -> u - C(u, 1-v).
  ShuffleOfM reflected_second() const;

  /// Survival copula, (u,v) -> u + v - 1 + C(1-u, 1-v).
  ShuffleOfM survival() const;

  /// One-piece shuffles: identity (the copula M) and countermonotone (W).
  static ShuffleOfM identity();
  static ShuffleOfM countermonotone();

  bool operator==(const ShuffleOfM& other) const = default;

 private:
  std::vector<double> breaks_;
  std::vector<int> perm_;   // 1-based slot index per piece
  std::vector<int> flips_;  // +1 / -1 slope per piece
  std::vector<double> slot_start_;
};

/// Validates a raw shuffle description (same contract as the constructor).
inline ShuffleOfM validate_shuffle(std::vector<double> breaks, std::vector<int> perm,
                                   std::vector<int> flips) {
  return ShuffleOfM(std::move(breaks), std::move(perm), std::move(flips));
}

}  // namespace concord
