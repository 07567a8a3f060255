#include "mfa/geometry1d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "mfa/error.hpp"
#include "mfa/parallel.hpp"

namespace mfa {
namespace {

void require_geometry(const WeightedSystem& sys) {
  if (!sys.has_geometry()) {
    throw Error(ErrorKind::NoGeometry, "system has no translations");
  }
}

struct Node {
  double lo;
  double len;
  double mass;
  std::size_t depth;
};

// Length of [lo, hi] intersected with [a, b]; <= 0 when they meet in at most a point.
double overlap(double lo, double hi, double a, double b) {
  return std::min(hi, b) - std::max(lo, a);
}

std::vector<MeasureBounds> bounds_on_grid(const WeightedSystem& sys, double x,
                                          std::span<const double> radii, double tol,
                                          std::size_t depth_cap) {
  std::vector<MeasureBounds> out(radii.size());
  parallel_for(radii.size(), [&](std::size_t i) {
    out[i] = ball_measure(sys, x, radii[i], tol, depth_cap);
  });
  return out;
}

}  // namespace

Interval cylinder_interval(const WeightedSystem& sys, const Word& word) {
  require_geometry(sys);
  const auto t = sys.translations();
  const auto r = sys.ratios();
  double lo = 0.0;
  double len = 1.0;
  for (Symbol s : word) {
    if (s >= sys.size()) throw Error(ErrorKind::Range, "symbol outside the alphabet");
    lo += len * t[s];
    len *= r[s];
  }
  return {lo, lo + len};
}

MeasureBounds ball_measure(const WeightedSystem& sys, double x, double r, double tol,
                           std::size_t depth_cap) {
  require_geometry(sys);
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::Domain, "x must lie in [0, 1]");
  if (!(r > 0.0)) throw Error(ErrorKind::Domain, "radius must be positive");

  const auto t = sys.translations();
  const auto ratios = sys.ratios();
  const auto probs = sys.probs();
  const double a = x - r;
  const double b = x + r;

  MeasureBounds out;
  std::vector<Node> stack{{0.0, 1.0, 1.0, 0}};
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    if (++out.nodes > kNodeBudget) {
      throw Error(ErrorKind::Budget, "ball_measure exceeded the node budget");
    }
    const double hi = node.lo + node.len;
    if (node.lo >= a && hi <= b) {
      out.lower += node.mass;
      out.upper += node.mass;
      continue;
    }
    if (overlap(node.lo, hi, a, b) <= 0.0) continue;
    if (node.len < tol || node.depth >= depth_cap) {
      out.upper += node.mass;
      out.straddle_mass += node.mass;
      out.depth_used = std::max(out.depth_used, node.depth);
      continue;
    }
    out.depth_used = std::max(out.depth_used, node.depth + 1);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      stack.push_back({node.lo + node.len * t[i], node.len * ratios[i], node.mass * probs[i],
                       node.depth + 1});
    }
  }
  out.lower = std::clamp(out.lower, 0.0, 1.0);
  out.upper = std::clamp(out.upper, out.lower, 1.0);
  return out;
}

std::vector<double> ScaleGrid::scales() const {
  std::vector<double> out;
  for (int k = k0; k <= k1; ++k) out.push_back(std::pow(base, -k));
  return out;
}

std::string ScaleGrid::describe() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g^(-k),k=%d..%d", base, k0, k1);
  return buf;
}

DoublingScan doubling_scan(const WeightedSystem& sys, double x, double gamma,
                           const ScaleGrid& grid, double tol, std::size_t depth_cap) {
  require_geometry(sys);
  if (!(gamma > 1.0)) throw Error(ErrorKind::Domain, "gamma must exceed 1");
  const auto radii = grid.scales();
  for (double r : radii) {
    if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::Domain, "scales must lie in (0, 1]");
  }
  std::vector<double> all(radii);
  for (double r : radii) all.push_back(gamma * r);
  const auto bounds = bounds_on_grid(sys, x, all, tol, depth_cap);

  DoublingScan scan;
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const MeasureBounds& small = bounds[i];
    const MeasureBounds& big = bounds[i + radii.size()];
    DoublingRow row{radii[i], small.lower, small.upper, 0.0, 0.0};
    row.ratio_lower = small.upper > 0.0 ? big.lower / small.upper : 0.0;
    row.ratio_upper = small.lower > 0.0 ? big.upper / small.lower : inf;
    scan.max_ratio_lower = std::max(scan.max_ratio_lower, row.ratio_lower);
    scan.max_ratio_upper = std::max(scan.max_ratio_upper, row.ratio_upper);
    scan.per_scale.push_back(row);
  }
  return scan;
}

AssouadScan assouad_scan(const WeightedSystem& sys, double x, const ScaleGrid& grid,
                         std::size_t pair_budget, double tol, std::size_t depth_cap) {
  require_geometry(sys);
  if (!(grid.base >= 2.0)) throw Error(ErrorKind::Domain, "scale grid base must be >= 2");
  const auto radii = grid.scales();
  const auto bounds = bounds_on_grid(sys, x, radii, tol, depth_cap);

  struct Pair {
    std::size_t big;
    std::size_t small;
    double log_gap;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (std::size_t j = i + 1; j < radii.size(); ++j) {
      pairs.push_back({i, j, std::log(radii[i] / radii[j])});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& u, const Pair& v) {
    if (u.log_gap != v.log_gap) return u.log_gap > v.log_gap;
    return radii[u.big] > radii[v.big];
  });
  if (pairs.size() > pair_budget) pairs.resize(pair_budget);

  AssouadScan scan;
  scan.estimate = -std::numeric_limits<double>::infinity();
  for (const Pair& pr : pairs) {
    const double num = bounds[pr.big].lower;
    const double den = bounds[pr.small].upper;
    if (!(num > 0.0 && den > 0.0)) continue;
    ++scan.pairs_used;
    const double value = std::log(num / den) / pr.log_gap;
    if (value > scan.estimate) {
      scan.estimate = value;
      scan.best_R = radii[pr.big];
      scan.best_r = radii[pr.small];
    }
  }
  return scan;
}

std::optional<WitnessPair> non_doubling_witness(const WeightedSystem& sys, double n_target,
                                                std::size_t depth_cap) {
  require_geometry(sys);
  if (!(n_target > 0.0)) throw Error(ErrorKind::Domain, "n_target must be positive");

  struct Cyl {
    Word word;
    double lo;
    double len;
    double mass;
  };
  std::vector<Cyl> level{{Word{}, 0.0, 1.0, 1.0}};
  std::size_t nodes = 1;
  const auto t = sys.translations();
  const auto ratios = sys.ratios();
  const auto probs = sys.probs();

  for (std::size_t depth = 1; depth <= depth_cap; ++depth) {
    nodes += level.size() * sys.size();
    if (nodes > kNodeBudget) {
      throw Error(ErrorKind::Budget, "witness search exceeded the node budget at depth " +
                                         std::to_string(depth));
    }
    std::vector<Cyl> next;
    next.reserve(level.size() * sys.size());
    for (const Cyl& c : level) {
      for (std::size_t i = 0; i < sys.size(); ++i) {
        Word w = c.word;
        w.push_back(static_cast<Symbol>(i));
        next.push_back({std::move(w), c.lo + c.len * t[i], c.len * ratios[i], c.mass * probs[i]});
      }
    }
    level = std::move(next);
    std::vector<std::size_t> order(level.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t u, std::size_t v) { return level[u].lo < level[v].lo; });

    std::optional<WitnessPair> best;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const Cyl& left = level[order[k]];
      const Cyl& right = level[order[k + 1]];
      const bool left_light = left.mass <= right.mass;
      const Cyl& ci = left_light ? left : right;
      const Cyl& cj = left_light ? right : left;
      const double ratio = cj.mass / ci.mass;
      if (ratio < n_target) continue;
      const Interval hi_i{ci.lo, ci.lo + ci.len};
      const Interval hi_j{cj.lo, cj.lo + cj.len};
      if (hi_j.lo < hi_i.lo - ci.len || hi_j.hi > hi_i.hi + ci.len) continue;
      if (best && ratio <= best->mass_ratio) continue;
      const double gap = std::max(0.0, std::max(hi_j.lo - hi_i.hi, hi_i.lo - hi_j.hi));
      best = WitnessPair{ci.word, cj.word, ci.mass, cj.mass, ratio, gap, hi_i, hi_j};
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::size_t osc_multiplicity(const WeightedSystem& sys, std::span<const double> xs,
                             const ScaleGrid& grid) {
  require_geometry(sys);
  const auto radii = grid.scales();
  const auto t = sys.translations();
  const auto ratios = sys.ratios();
  std::vector<std::size_t> per_x(xs.size(), 0);

  parallel_for(xs.size(), [&](std::size_t ix) {
    const double x = xs[ix];
    std::size_t best = 0;
    for (double r : radii) {
      if (r >= 1.0) {
        best = std::max<std::size_t>(best, 1);
        continue;
      }
      const double a = x - r;
      const double b = x + r;
      std::size_t count = 0;
      std::vector<Interval> stack{{0.0, 1.0}};
      std::size_t nodes = 0;
      while (!stack.empty()) {
        const Interval node = stack.back();
        stack.pop_back();
        if (++nodes > kNodeBudget) {
          throw Error(ErrorKind::Budget, "osc_multiplicity exceeded the node budget");
        }
        const double len = node.length();
        for (std::size_t i = 0; i < sys.size(); ++i) {
          const double lo = node.lo + len * t[i];
          const double child_len = len * ratios[i];
          if (overlap(lo, lo + child_len, a, b) <= 0.0) continue;
          if (child_len <= r) {
            ++count;
          } else {
            stack.push_back({lo, lo + child_len});
          }
        }
      }
      best = std::max(best, count);
    }
    per_x[ix] = best;
  });
  return per_x.empty() ? 0 : *std::max_element(per_x.begin(), per_x.end());
}

}  // namespace mfa
