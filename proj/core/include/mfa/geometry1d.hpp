#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfa/system.hpp"
#include "mfa/word.hpp"

namespace mfa {

inline constexpr std::size_t kNodeBudget = 10'000'000;
inline constexpr double kBallTolerance = 1e-13;
inline constexpr std::size_t kDepthCap = 64;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
};

/// phi_a([0,1]). Throws Error(NoGeometry) for systems without translations.
Interval cylinder_interval(const WeightedSystem& sys, const Word& word);

/// Enclosure of mu(B(x, r)) for the closed ball B(x, r) = [x - r, x + r].
struct MeasureBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t depth_used = 0;
  double straddle_mass = 0.0;  // mass of cylinders left undecided
  std::size_t nodes = 0;
};

/// Walks the cylinder tree: hulls inside the ball count fully, hulls
/// disjoint from it (or meeting it in a single point, which carries no mass
/// because mu has no atoms) are dropped, and the rest are split until
/// r_a < tol or depth_cap, where their mass goes to the upper bound only.
/// Throws Error(Budget) after kNodeBudget nodes.
MeasureBounds ball_measure(const WeightedSystem& sys, double x, double r,
                           double tol = kBallTolerance, std::size_t depth_cap = kDepthCap);

/// Radii base^(-k) for k = k0..k1 (decreasing radii).
struct ScaleGrid {
  double base = 2.0;
  int k0 = 1;
  int k1 = 40;

  std::vector<double> scales() const;
  std::string describe() const;
};

struct DoublingRow {
  double r = 0.0;
  double lower = 0.0;  // bounds on mu(B(x, r))
  double upper = 0.0;
  double ratio_lower = 0.0;  // lower(gamma r) / upper(r)
  double ratio_upper = 0.0;  // upper(gamma r) / lower(r)
};

struct DoublingScan {
  double max_ratio_lower = 0.0;  // certified lower bound for sup_r of the ratio
  double max_ratio_upper = 0.0;
  std::vector<DoublingRow> per_scale;
};

DoublingScan doubling_scan(const WeightedSystem& sys, double x, double gamma,
                           const ScaleGrid& grid, double tol = kBallTolerance,
                           std::size_t depth_cap = kDepthCap);

struct AssouadScan {
  double estimate = 0.0;  // max of the certified pair values
  std::size_t pairs_used = 0;
  double best_R = 0.0;
  double best_r = 0.0;
};

/// Lower-bound scan of the pointwise Assouad dimension at x: the maximum over
/// scale pairs r < R of log(lower(R) / upper(r)) / log(R / r). Pairs are
/// visited widest first (largest R / r, then largest R) and at most
/// pair_budget of them are used. The grid base must be >= 2.
AssouadScan assouad_scan(const WeightedSystem& sys, double x, const ScaleGrid& grid,
                         std::size_t pair_budget, double tol = kBallTolerance,
                         std::size_t depth_cap = kDepthCap);

/// Words i, j with phi_j([0,1]) inside the closed r_i-neighbourhood of
/// phi_i([0,1]) and p_j >= n p_i.
struct WitnessPair {
  Word i;
  Word j;
  double mass_i = 0.0;
  double mass_j = 0.0;
  double mass_ratio = 0.0;  // p_j / p_i
  double gap = 0.0;         // distance between the two hulls
  Interval hull_i;
  Interval hull_j;
};

/// Sweeps neighbouring cylinders level by level up to depth_cap and returns
/// the pair with the largest mass ratio at the first level where some pair
/// reaches n_target; nullopt when none does.
std::optional<WitnessPair> non_doubling_witness(const WeightedSystem& sys, double n_target,
                                                std::size_t depth_cap);

/// Observed max over the sampled (x, r) of the number of words a with
/// r_a <= r < r_{a^-} whose hull meets B(x, r) in a set of positive length.
std::size_t osc_multiplicity(const WeightedSystem& sys, std::span<const double> xs,
                             const ScaleGrid& grid);

}  // namespace mfa
