#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace mfa::detail {

inline double log_sum_exp(std::span<const double> xs) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : xs) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

/// Root of a strictly decreasing function by doubling out from [-1, 1] and
/// bisecting. `done(mid, value, width)` decides when to stop.
template <typename F, typename Done>
bool bisect_decreasing(F&& fn, Done&& done, double& root, int max_doublings = 1000) {
  double lo = -1.0;
  double hi = 1.0;
  int doublings = 0;
  double flo = fn(lo);
  while (flo < 0.0) {
    if (++doublings > max_doublings || !std::isfinite(lo)) return false;
    hi = lo;
    lo *= 2.0;
    flo = fn(lo);
  }
  double fhi = fn(hi);
  while (fhi > 0.0) {
    if (++doublings > max_doublings || !std::isfinite(hi)) return false;
    lo = hi;
    hi *= 2.0;
    fhi = fn(hi);
  }
  if (std::isnan(flo) || std::isnan(fhi)) return false;
  for (int iter = 0; iter < 4000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = fn(mid);
    if (std::isnan(fm)) return false;
    if (fm == 0.0 || mid == lo || mid == hi || done(mid, fm, hi - lo)) {
      root = mid;
      return true;
    }
    (fm > 0.0 ? lo : hi) = mid;
  }
  root = 0.5 * (lo + hi);
  return true;
}

}  // namespace mfa::detail
