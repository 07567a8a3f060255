#include "mfa/moran.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfa/error.hpp"
#include "mfa/spectrum.hpp"
#include "mfa/symbolic.hpp"
#include "numeric.hpp"

namespace mfa {
namespace {

/// log sum_{a in Gamma} r_a^t
double log_block_sum(const BlockAlphabet& gamma, double t) {
  const auto groups = gamma.groups();
  std::vector<double> terms(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    terms[i] = groups[i].log_count + t * groups[i].log_r;
  }
  return detail::log_sum_exp(terms);
}

}  // namespace

MoranSpec moran_construct(const WeightedSystem& sys, double alpha, double epsilon, std::size_t n,
                          std::size_t K, const Word& kappa) {
  const auto [lo, hi] = alpha_bounds(sys);
  if (!(alpha > lo && alpha < hi)) {
    throw Error(ErrorKind::Domain, "Moran construction needs alpha strictly inside (" +
                                       std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
  if (!(epsilon > 0.0)) throw Error(ErrorKind::Domain, "epsilon must be positive");
  if (K == 0) throw Error(ErrorKind::Domain, "need at least one stage");

  const double fb = f_bar(sys, alpha);
  BlockAlphabet gamma = gamma_n_alpha(sys, n, alpha, kappa);
  if (gamma.empty()) {
    throw Error(ErrorKind::NeedLargerN, "Gamma_" + std::to_string(n) + "(" +
                                            std::to_string(alpha) + ") is empty");
  }
  const double dim = subshift_dimension(gamma);
  if (!(dim > fb - 0.5 * epsilon)) {
    throw Error(ErrorKind::NeedLargerN,
                "dim Sigma(Gamma_" + std::to_string(n) + "(alpha)) = " + std::to_string(dim) +
                    " does not exceed f_bar(alpha) - epsilon/2 = " +
                    std::to_string(fb - 0.5 * epsilon));
  }
  const BlockAlphabet base = base_blocks(sys, n, kappa);
  if (!(alpha >= base.alpha_min() && alpha <= base.alpha_max())) {
    throw Error(ErrorKind::NeedLargerN, "alpha outside the ratio range of the base blocks");
  }

  MoranSpec spec{n, alpha, epsilon, fb, fb - epsilon, dim, std::move(gamma), {}, {}, {}, 0.0};
  spec.spine = greedy_word(sys, base, alpha, K);

  const double log_sum = log_block_sum(spec.blocks, spec.s);
  double log_r = 0.0;
  for (std::size_t k = 1; k <= K; ++k) {
    log_r += word_stats(sys, spec.spine.subword((k - 1) * n, n)).log_r;
    spec.spine_log_r.push_back(log_r);
    std::uint64_t M = 1;
    while (!(static_cast<double>(M) * log_sum + spec.s * log_r > 0.0)) {
      if (++M > kMoranMultiplicityCap) {
        throw Error(ErrorKind::SizeCap, "M_" + std::to_string(k) + " exceeds 1e6");
      }
    }
    spec.M.push_back(M);
    spec.growth_constant =
        std::max(spec.growth_constant, static_cast<double>(M) / static_cast<double>(k));
  }
  return spec;
}

double moran_dimension(const MoranSpec& spec, std::size_t k, double tol) {
  if (k == 0 || k > spec.stages()) {
    throw Error(ErrorKind::Domain, "stage " + std::to_string(k) + " outside 1.." +
                                       std::to_string(spec.stages()));
  }
  double total_M = 0.0;
  double total_log_r = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    total_M += static_cast<double>(spec.M[j]);
    total_log_r += spec.spine_log_r[j];
  }
  double root = 0.0;
  const bool ok = detail::bisect_decreasing(
      [&](double t) { return total_M * log_block_sum(spec.blocks, t) + t * total_log_r; },
      [tol](double, double, double width) { return width <= tol; }, root);
  if (!ok) throw Error(ErrorKind::Bracket, "Moran dimension could not be bracketed");
  return root;
}

}  // namespace mfa
