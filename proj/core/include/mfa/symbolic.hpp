#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mfa/blocks.hpp"
#include "mfa/system.hpp"
#include "mfa/word.hpp"

namespace mfa {

/// log p_{w|n} / log r_{w|n} for each requested depth n (1 <= n <= |w|).
std::vector<double> local_dim_prefixes(const WeightedSystem& sys, const Word& word,
                                       std::span<const std::size_t> depths);

/// Finite-prefix stand-in for the pointwise Assouad dimension of the
/// Bernoulli measure along a word: the supremum of log p_a / log r_a over all
/// windows a of each length n, and the maximum of those suprema over the top
/// quartile of window lengths.
struct AssouadEstimate {
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  std::size_t step = 1;
  std::vector<double> per_n_sup;  // per_n_sup[k] is for n = n_lo + k * step
  double estimate = 0.0;

  std::size_t window_length(std::size_t k) const { return n_lo + k * step; }
};

/// Window lengths n_lo, n_lo + step, ... <= n_hi; requires 1 <= n_lo <= n_hi <= |word|.
AssouadEstimate assouad_estimate(const WeightedSystem& sys, const Word& word, std::size_t n_lo,
                                 std::size_t n_hi, std::size_t step = 1);

/// Streams the word whose prefix ratios track alpha: start with the maximal
/// symbol, then take the maximal symbol while the prefix ratio is below alpha
/// and the minimal one otherwise (ties go to the minimal symbol).
class GreedyWordGenerator {
 public:
  /// Over the base alphabet. Throws Error(Domain) unless alpha_min <= alpha <= alpha_max.
  GreedyWordGenerator(const WeightedSystem& sys, double alpha);
  /// Over a block alphabet, using its extreme-ratio blocks as the two letters.
  GreedyWordGenerator(const WeightedSystem& sys, const BlockAlphabet& gamma, double alpha);

  /// Next letter (a single symbol, or a whole block).
  Word next();
  double prefix_ratio() const { return log_p_ / log_r_; }

 private:
  Word low_;
  Word high_;
  double low_log_p_ = 0.0, low_log_r_ = 0.0;
  double high_log_p_ = 0.0, high_log_r_ = 0.0;
  double alpha_ = 0.0;
  double log_p_ = 0.0;
  double log_r_ = 0.0;
  bool started_ = false;
};

/// First `length` symbols of the greedy word over the base alphabet.
Word greedy_word(const WeightedSystem& sys, double alpha, std::size_t length);
/// First `block_count` blocks of the greedy word over gamma, concatenated.
Word greedy_word(const WeightedSystem& sys, const BlockAlphabet& gamma, double alpha,
                 std::size_t block_count);

/// i.i.d. symbols drawn from `probs` with a seeded 64-bit Mersenne twister.
/// The same seed yields the same word on every platform.
Word sample_word(std::span<const double> probs, std::size_t length, std::uint64_t seed);

}  // namespace mfa
