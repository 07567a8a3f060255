#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mfa/system.hpp"

namespace mfa {

/// |q| used for the endpoint limits alpha -> alpha_min / alpha_max.
inline constexpr double kQCap = 200.0;
inline constexpr double kTauTolerance = 1e-12;
inline constexpr double kFormulaAgreement = 1e-8;

/// Uniform grid "lo:hi:count" (count points including both ends).
struct QGrid {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;

  std::vector<double> points() const;
  std::string describe() const;
};

/// L^q spectrum: the unique t with sum_i p_i^q r_i^t = 1.
double solve_tau(const WeightedSystem& sys, double q, double tol = kTauTolerance);

/// alpha(q) = sum w_i log p_i / sum w_i log r_i with w_i = p_i^q r_i^tau(q).
double alpha_of_q(const WeightedSystem& sys, double q);

/// Inverse of alpha_of_q on the open interval (alpha_min, alpha_max).
double q_of_alpha(const WeightedSystem& sys, double alpha, double tol = 1e-14);

/// Both evaluations of f(alpha) at q = q(alpha).
struct LegendreEvaluation {
  double q = 0.0;
  double tau = 0.0;
  double legendre = 0.0;           // alpha * q + tau(q)
  double explicit_quotient = 0.0;  // sum w log w / sum w log r
  bool endpoint = false;           // evaluated as a limit at q = +-kQCap
};

LegendreEvaluation evaluate_f(const WeightedSystem& sys, double alpha);

/// Multifractal spectrum f(alpha) on [alpha_min, alpha_max]. Interior values
/// are cross-checked between the two formulas (ConsistencyError beyond 1e-8);
/// the endpoints are limits along q -> +-kQCap and accurate to about 1e-3.
double f_of_alpha(const WeightedSystem& sys, double alpha);

/// Running maximum of f: f(alpha) up to alpha(0), tau(0) beyond.
double f_bar(const WeightedSystem& sys, double alpha);

/// Grid minimum of alpha*q + tau(q); an oracle independent of q_of_alpha.
/// The grid must span [-kQCap, kQCap] with at least 1000 points.
double legendre_numeric(const WeightedSystem& sys, double alpha, const QGrid& grid);

/// legendre_numeric with tau tabulated once, for many alpha on one system.
class LegendreOracle {
 public:
  LegendreOracle(const WeightedSystem& sys, const QGrid& grid);
  double operator()(double alpha) const;

 private:
  std::vector<double> q_;
  std::vector<double> tau_;
};

/// (p_i^q r_i^tau(q))_i, normalised.
std::vector<double> tilted_vector(const WeightedSystem& sys, double q);

struct SpectrumRow {
  double q = 0.0;
  double tau = 0.0;
  double alpha = 0.0;
  double f = 0.0;
  double f_bar = 0.0;
};

struct SpectrumTable {
  std::vector<SpectrumRow> rows;
  std::uint64_t system_hash = 0;
  std::string grid;
  double tolerance = kTauTolerance;
};

/// One row per grid point, sorted by q. Rows are computed in parallel.
SpectrumTable spectrum_table(const WeightedSystem& sys, const QGrid& grid,
                             double tol = kTauTolerance);

}  // namespace mfa
