#pragma once

// Brute-force reference computations used only by the tests. Each one avoids
// the code path it checks: words are enumerated explicitly, roots are found
// in closed form where possible, and ball masses come from fixed-depth
// cylinder sums instead of the adaptive recursion.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "mfa/system.hpp"
#include "mfa/word.hpp"

namespace mfa::oracle {

inline WeightedSystem s1() {
  return validate_system({{1.0 / 3.0, 2.0 / 3.0}, {0.5, 0.5}, std::vector<double>{0.0, 0.5}});
}

inline WeightedSystem uniform_dyadic() {
  return validate_system({{0.5, 0.5}, {0.5, 0.5}, std::vector<double>{0.0, 0.5}});
}

/// Every word of length n over m symbols, lexicographic.
inline std::vector<Word> all_words(std::size_t m, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Word> next;
    for (const Word& w : out) {
      for (std::size_t s = 0; s < m; ++s) {
        Word v = w;
        v.push_back(static_cast<Symbol>(s));
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline double product(std::span<const double> xs, const Word& w) {
  double acc = 1.0;
  for (Symbol s : w) acc *= xs[s];
  return acc;
}

/// tau(q) for a system whose ratios are all equal to r.
inline double tau_equal_ratio(std::span<const double> probs, double r, double q) {
  double sum = 0.0;
  for (double p : probs) sum += std::pow(p, q);
  return std::log(sum) / -std::log(r);
}

/// Sup over windows of length n of log p / log r, by direct products.
inline double window_sup(const WeightedSystem& sys, const Word& w, std::size_t n) {
  double best = -INFINITY;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    double lp = 0.0, lr = 0.0;
    for (std::size_t k = i; k < i + n; ++k) {
      lp += std::log(sys.probs()[w[k]]);
      lr += std::log(sys.ratios()[w[k]]);
    }
    best = std::max(best, lp / lr);
  }
  return best;
}

/// Limit of the window suprema for u v^infinity: windows eventually see only
/// cyclic shifts of v, so the limit is the ratio of one period.
inline double periodic_limsup(const WeightedSystem& sys, const Word& period) {
  double lp = 0.0, lr = 0.0;
  for (Symbol s : period) {
    lp += std::log(sys.probs()[s]);
    lr += std::log(sys.ratios()[s]);
  }
  return lp / lr;
}

/// mu(B(x, r)) bracketed by summing all cylinders of length `depth`: those
/// inside the ball count for both ends, those meeting it for the upper end.
struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

inline Bracket ball_by_level(const WeightedSystem& sys, double x, double r, std::size_t depth) {
  Bracket out;
  const auto t = sys.translations();
  std::function<void(double, double, double, std::size_t)> go = [&](double lo, double len,
                                                                      double mass,
                                                                      std::size_t d) {
    if (d == depth) {
      const double hi = lo + len;
      if (lo >= x - r && hi <= x + r) {
        out.lower += mass;
        out.upper += mass;
      } else if (std::min(hi, x + r) - std::max(lo, x - r) > 0.0) {
        out.upper += mass;
      }
      return;
    }
    for (std::size_t i = 0; i < sys.size(); ++i) {
      go(lo + len * t[i], len * sys.ratios()[i], mass * sys.probs()[i], d + 1);
    }
  };
  go(0.0, 1.0, 1.0, 0);
  return out;
}

/// Binary point 0.1 0^{L_1} 1 0^{L_2} 1 ... : its coding under the dyadic
/// maps has a run of L_j copies of the left map after the j-th right map.
inline double growing_runs_point(std::span<const int> runs) {
  double x = 0.0;
  double scale = 0.5;
  for (int run : runs) {
    x += scale;
    scale *= 0.5;
    for (int k = 0; k < run; ++k) scale *= 0.5;
  }
  return x;
}

/// Left endpoint of the cylinder hull of w.
inline double left_endpoint(const WeightedSystem& sys, const Word& w) {
  double lo = 0.0, len = 1.0;
  for (Symbol s : w) {
    lo += len * sys.translations()[s];
    len *= sys.ratios()[s];
  }
  return lo;
}

/// Random valid system with m symbols; translations pack the intervals from
/// the left with random gaps when `geometry` is set.
inline WeightedSystem random_system(std::mt19937_64& gen, std::size_t m, bool geometry = false,
                                    bool equal_ratios = false) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> p(m);
  double sum = 0.0;
  for (auto& x : p) sum += (x = u(gen));
  for (auto& x : p) x /= sum;
  sum = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) sum += p[i];
  p[m - 1] = 1.0 - sum;

  std::vector<double> r(m);
  const double common = std::uniform_real_distribution<double>(0.1, 0.9 / m)(gen);
  for (auto& x : r) x = equal_ratios ? common : std::uniform_real_distribution<double>(0.05, 0.9 / m)(gen);
  RawSystem raw{p, r, std::nullopt};
  if (geometry) {
    double used = 0.0;
    for (double x : r) used += x;
    const double slack = (1.0 - used) / static_cast<double>(m + 1);
    std::vector<double> t(m);
    double pos = slack;
    for (std::size_t i = 0; i < m; ++i) {
      t[i] = pos;
      pos += r[i] + slack;
    }
    raw.translations = t;
  }
  return validate_system(raw);
}

}  // namespace mfa::oracle
