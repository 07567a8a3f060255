#include "mfa/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "mfa/error.hpp"
#include "mfa/parallel.hpp"
#include "numeric.hpp"

namespace mfa {
namespace {

constexpr double kEndpointSlack = 1e-12;

/// log sum_i p_i^q r_i^t
double log_moment(const WeightedSystem& sys, double q, double t) {
  const auto lp = sys.log_probs();
  const auto lr = sys.log_ratios();
  std::vector<double> terms(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) terms[i] = q * lp[i] + t * lr[i];
  return detail::log_sum_exp(terms);
}

struct Tilt {
  std::vector<double> log_w;  // q log p_i + tau log r_i, unnormalised
  std::vector<double> w;      // normalised weights
};

Tilt tilt(const WeightedSystem& sys, double q, double tau) {
  Tilt out;
  out.log_w.resize(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out.log_w[i] = q * sys.log_probs()[i] + tau * sys.log_ratios()[i];
  }
  const double norm = detail::log_sum_exp(out.log_w);
  out.w.resize(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) out.w[i] = std::exp(out.log_w[i] - norm);
  return out;
}

double alpha_from_tilt(const WeightedSystem& sys, const Tilt& t) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    num += t.w[i] * sys.log_probs()[i];
    den += t.w[i] * sys.log_ratios()[i];
  }
  return num / den;
}

double explicit_quotient(const WeightedSystem& sys, const Tilt& t) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    num += t.w[i] * t.log_w[i];
    den += t.w[i] * sys.log_ratios()[i];
  }
  return num / den;
}

void check_domain(const WeightedSystem& sys, double alpha) {
  const auto [lo, hi] = alpha_bounds(sys);
  if (!(alpha >= lo - kEndpointSlack && alpha <= hi + kEndpointSlack)) {
    throw Error(ErrorKind::Domain, "alpha " + std::to_string(alpha) + " outside [" +
                                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

std::vector<double> QGrid::points() const {
  std::vector<double> out;
  if (count == 0) return out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(i + 1 == count ? hi : lo + step * static_cast<double>(i));
  }
  return out;
}

std::string QGrid::describe() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g:%.17g:%zu", lo, hi, count);
  return buf;
}

double solve_tau(const WeightedSystem& sys, double q, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::Domain, "tolerance must be positive");
  double root = 0.0;
  const bool ok = detail::bisect_decreasing(
      [&](double t) { return log_moment(sys, q, t); },
      [tol](double, double value, double width) {
        return width <= tol && std::abs(std::expm1(value)) <= tol;
      },
      root);
  if (!ok) {
    throw Error(ErrorKind::Bracket, "tau(" + std::to_string(q) + ") could not be bracketed");
  }
  return root;
}

double alpha_of_q(const WeightedSystem& sys, double q) {
  return alpha_from_tilt(sys, tilt(sys, q, solve_tau(sys, q)));
}

double q_of_alpha(const WeightedSystem& sys, double alpha, double tol) {
  const auto [lo, hi] = alpha_bounds(sys);
  if (!(alpha > lo && alpha < hi)) {
    throw Error(ErrorKind::Domain, "q(alpha) needs alpha strictly inside (" +
                                       std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
  // alpha_of_q is decreasing, so alpha_of_q(q) - alpha is too.
  double root = 0.0;
  const bool ok = detail::bisect_decreasing(
      [&](double q) { return alpha_of_q(sys, q) - alpha; },
      [tol](double, double value, double) { return std::abs(value) <= tol; }, root);
  if (!ok) throw Error(ErrorKind::Bracket, "q(alpha) could not be bracketed");
  return root;
}

LegendreEvaluation evaluate_f(const WeightedSystem& sys, double alpha) {
  check_domain(sys, alpha);
  const auto [lo, hi] = alpha_bounds(sys);
  LegendreEvaluation out;
  if (sys.degenerate()) {
    out.tau = solve_tau(sys, 0.0);
    out.legendre = out.explicit_quotient = out.tau;
    return out;
  }
  if (alpha <= lo + kEndpointSlack || alpha >= hi - kEndpointSlack) {
    out.endpoint = true;
    out.q = alpha <= lo + kEndpointSlack ? kQCap : -kQCap;
  } else {
    out.q = q_of_alpha(sys, alpha);
  }
  out.tau = solve_tau(sys, out.q);
  const Tilt t = tilt(sys, out.q, out.tau);
  out.legendre = alpha * out.q + out.tau;
  out.explicit_quotient = explicit_quotient(sys, t);
  return out;
}

double f_of_alpha(const WeightedSystem& sys, double alpha) {
  const LegendreEvaluation e = evaluate_f(sys, alpha);
  if (e.endpoint) return e.explicit_quotient;
  if (std::abs(e.legendre - e.explicit_quotient) > kFormulaAgreement) {
    throw Error(ErrorKind::Consistency,
                "f(" + std::to_string(alpha) + "): Legendre value " + std::to_string(e.legendre) +
                    " and explicit quotient " + std::to_string(e.explicit_quotient) + " disagree");
  }
  return e.legendre;
}

double f_bar(const WeightedSystem& sys, double alpha) {
  check_domain(sys, alpha);
  if (sys.degenerate() || alpha > alpha_of_q(sys, 0.0)) return solve_tau(sys, 0.0);
  return f_of_alpha(sys, alpha);
}

LegendreOracle::LegendreOracle(const WeightedSystem& sys, const QGrid& grid) {
  if (grid.count < 1000 || grid.lo > -kQCap || grid.hi < kQCap) {
    throw Error(ErrorKind::Domain, "Legendre grid must span [-200, 200] with >= 1000 points");
  }
  q_ = grid.points();
  tau_.resize(q_.size());
  parallel_for(q_.size(), [&](std::size_t i) { tau_[i] = solve_tau(sys, q_[i]); });
}

double LegendreOracle::operator()(double alpha) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < q_.size(); ++i) best = std::min(best, alpha * q_[i] + tau_[i]);
  return best;
}

double legendre_numeric(const WeightedSystem& sys, double alpha, const QGrid& grid) {
  return LegendreOracle(sys, grid)(alpha);
}

std::vector<double> tilted_vector(const WeightedSystem& sys, double q) {
  return tilt(sys, q, solve_tau(sys, q)).w;
}

SpectrumTable spectrum_table(const WeightedSystem& sys, const QGrid& grid, double tol) {
  SpectrumTable table;
  table.system_hash = system_fingerprint(sys);
  table.grid = grid.describe();
  table.tolerance = tol;
  std::vector<double> qs = grid.points();
  std::sort(qs.begin(), qs.end());
  table.rows.resize(qs.size());
  if (qs.empty()) return table;
  const double tau0 = solve_tau(sys, 0.0, tol);
  parallel_for(qs.size(), [&](std::size_t i) {
    SpectrumRow& row = table.rows[i];
    row.q = qs[i];
    row.tau = solve_tau(sys, row.q, tol);
    row.alpha = alpha_from_tilt(sys, tilt(sys, row.q, row.tau));
    row.f = row.alpha * row.q + row.tau;
    // alpha(q) <= alpha(0) exactly when q >= 0.
    row.f_bar = (row.q >= 0.0 || sys.degenerate()) ? row.f : tau0;
  });
  return table;
}

}  // namespace mfa
