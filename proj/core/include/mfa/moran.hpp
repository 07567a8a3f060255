#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mfa/blocks.hpp"
#include "mfa/system.hpp"
#include "mfa/word.hpp"

namespace mfa {

inline constexpr std::uint64_t kMoranMultiplicityCap = 1'000'000;

/// Moran set Gamma^{M_1} x {spine|_1} x Gamma^{M_2} x {spine|_2} x ...
/// where Gamma = Gamma_n(alpha), spine|_k is the first k blocks of the greedy
/// word for alpha over the base Gamma_n, and each M_k is the least positive
/// integer with (sum_{a in Gamma} r_a^s)^{M_k} r_{spine|k}^s > 1.
struct MoranSpec {
  std::size_t n = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double f_bar = 0.0;
  double s = 0.0;              // f_bar - epsilon
  double subshift_dim = 0.0;   // dim Sigma(Gamma_n(alpha))
  BlockAlphabet blocks;
  Word spine;                  // K blocks of the greedy word
  std::vector<std::uint64_t> M;  // M[k-1] = M_k
  std::vector<double> spine_log_r;  // spine_log_r[k-1] = log r of the first k spine blocks
  double growth_constant = 0.0;  // max_k M_k / k

  std::size_t stages() const { return M.size(); }
};

/// Builds the first K stages. Throws Error(Domain) unless
/// alpha_min < alpha < alpha_max, and Error(NeedLargerN) when
/// dim Sigma(Gamma_n(alpha)) <= f_bar(alpha) - epsilon / 2 (the message reports
/// the dimension reached).
MoranSpec moran_construct(const WeightedSystem& sys, double alpha, double epsilon, std::size_t n,
                          std::size_t K, const Word& kappa = {});

/// s_k solving prod_{j<=k} (sum_{a in Gamma} r_a^t)^{M_j} r_{spine|j}^t = 1, for 1 <= k <= K.
double moran_dimension(const MoranSpec& spec, std::size_t k, double tol = 1e-12);

}  // namespace mfa
