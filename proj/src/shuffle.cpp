#include "concord/shuffle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace concord {

ShuffleOfM::ShuffleOfM(std::vector<double> breaks, std::vector<int> perm, std::vector<int> flips)
    : breaks_(std::move(breaks)), perm_(std::move(perm)), flips_(std::move(flips)) {
  if (breaks_.size() < 2 || breaks_.front() != 0.0)
    fail(Errc::BadEndpoints, "breaks must start at exactly 0");
  const int n = static_cast<int>(breaks_.size()) - 1;
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(breaks_[i + 1]) || !(breaks_[i] < breaks_[i + 1]))
      fail(Errc::NonMonotoneBreaks, "breaks must be finite and strictly increasing");
  }
  if (breaks_.back() != 1.0) fail(Errc::BadEndpoints, "breaks must end at exactly 1");
  if (static_cast<int>(perm_.size()) != n)
    fail(Errc::BadPermutation, "perm length must equal the piece count");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm_) {
    if (p < 1 || p > n || seen[static_cast<std::size_t>(p - 1)])
      fail(Errc::BadPermutation, "perm must be a bijection of {1..n}");
    seen[static_cast<std::size_t>(p - 1)] = true;
  }
  if (static_cast<int>(flips_.size()) != n)
    fail(Errc::BadFlipCount, "flips length must equal the piece count");
  for (int f : flips_)
    if (f != 1 && f != -1) fail(Errc::BadFlipCount, "flips entries must be +1 or -1");

  // Slot geometry: slot j (bottom to top) holds piece perm^{-1}(j), so its
  // start is the cumulative width of the pieces landing below it.
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm_[i] - 1)] = i;
  std::vector<double> slot_of_rank(static_cast<std::size_t>(n));
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    slot_of_rank[static_cast<std::size_t>(j)] = acc;
    acc += piece_width(inv[static_cast<std::size_t>(j)]);
  }
  slot_start_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) slot_start_[i] = slot_of_rank[static_cast<std::size_t>(perm_[i] - 1)];
}

namespace {

// Piece index for u: right-continuous at interior breaks, last piece at u=1.
int piece_index(const std::vector<double>& breaks, double u) {
  auto it = std::upper_bound(breaks.begin(), breaks.end(), u);
  int i = static_cast<int>(it - breaks.begin()) - 1;
  int last = static_cast<int>(breaks.size()) - 2;
  return std::clamp(i, 0, last);
}

}  // namespace

double ShuffleOfM::support(UnitValue u) const {
  const double x = u;
  const int i = piece_index(breaks_, x);
  const double v = flips_[i] > 0 ? slot_start_[i] + (x - breaks_[i])
                                 : slot_start_[i] + (breaks_[i + 1] - x);
  return std::clamp(v, 0.0, 1.0);
}

double ShuffleOfM::eval(UnitValue u, UnitValue v) const {
  const double uu = u, vv = v;
  const int n = piece_count();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lo = breaks_[i];
    if (lo >= uu) break;
    const double hi = breaks_[i + 1];
    const double cap = std::min(uu, hi);
    const double slack = vv - slot_start_[i];  // v-room inside the slot
    double part;
    if (flips_[i] > 0) {
      part = std::min(cap - lo, slack);
    } else {
      part = cap - std::max(lo, hi - slack);
    }
    if (part > 0.0) acc += part;
  }
  return std::clamp(acc, 0.0, 1.0);
}

ShuffleOfM ShuffleOfM::transposed() const {
  const int n = piece_count();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm_[i] - 1)] = i;
  std::vector<double> nb(static_cast<std::size_t>(n) + 1);
  std::vector<int> np(static_cast<std::size_t>(n)), nf(static_cast<std::size_t>(n));
  nb[0] = 0.0;
  for (int j = 0; j < n; ++j) {
    const int k = inv[static_cast<std::size_t>(j)];
    nb[static_cast<std::size_t>(j) + 1] = nb[static_cast<std::size_t>(j)] + piece_width(k);
    np[static_cast<std::size_t>(j)] = k + 1;
    nf[static_cast<std::size_t>(j)] = flips_[k];
  }
  nb.back() = 1.0;
  return ShuffleOfM(std::move(nb), std::move(np), std::move(nf));
}

ShuffleOfM ShuffleOfM::reflected_first() const {
  const int n = piece_count();
  std::vector<double> nb(static_cast<std::size_t>(n) + 1);
  std::vector<int> np(static_cast<std::size_t>(n)), nf(static_cast<std::size_t>(n));
  for (int i = 0; i <= n; ++i) nb[static_cast<std::size_t>(i)] = 1.0 - breaks_[n - i];
  nb.front() = 0.0;
  nb.back() = 1.0;
  for (int i = 0; i < n; ++i) {
    np[static_cast<std::size_t>(n - 1 - i)] = perm_[i];
    nf[static_cast<std::size_t>(n - 1 - i)] = -flips_[i];
  }
  return ShuffleOfM(std::move(nb), std::move(np), std::move(nf));
}

ShuffleOfM ShuffleOfM::reflected_second() const {
  const int n = piece_count();
  std::vector<int> np(static_cast<std::size_t>(n)), nf(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    np[static_cast<std::size_t>(i)] = n + 1 - perm_[i];
    nf[static_cast<std::size_t>(i)] = -flips_[i];
  }
  return ShuffleOfM(breaks_, std::move(np), std::move(nf));
}

ShuffleOfM ShuffleOfM::survival() const {
  const int n = piece_count();
  std::vector<double> nb(static_cast<std::size_t>(n) + 1);
  std::vector<int> np(static_cast<std::size_t>(n)), nf(static_cast<std::size_t>(n));
  for (int i = 0; i <= n; ++i) nb[static_cast<std::size_t>(i)] = 1.0 - breaks_[n - i];
  nb.front() = 0.0;
  nb.back() = 1.0;
  for (int i = 0; i < n; ++i) {
    np[static_cast<std::size_t>(n - 1 - i)] = n + 1 - perm_[i];
    nf[static_cast<std::size_t>(n - 1 - i)] = flips_[i];
  }
  return ShuffleOfM(std::move(nb), std::move(np), std::move(nf));
}

ShuffleOfM ShuffleOfM::identity() { return ShuffleOfM({0.0, 1.0}, {1}, {1}); }

ShuffleOfM ShuffleOfM::countermonotone() { return ShuffleOfM({0.0, 1.0}, {1}, {-1}); }

}  // namespace concord
