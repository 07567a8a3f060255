#include "mfa/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "mfa/error.hpp"
#include "mfa/parallel.hpp"

namespace mfa {
namespace {

constexpr double kAlphaSlack = 1e-12;

struct PrefixSums {
  std::vector<double> log_p;  // log_p[k] = log p of the first k symbols
  std::vector<double> log_r;
};

PrefixSums prefix_sums(const WeightedSystem& sys, const Word& word) {
  PrefixSums out;
  out.log_p.resize(word.size() + 1, 0.0);
  out.log_r.resize(word.size() + 1, 0.0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Symbol s = word[i];
    if (s >= sys.size()) {
      throw Error(ErrorKind::Range, "symbol " + std::to_string(s + 1) + " outside alphabet");
    }
    out.log_p[i + 1] = out.log_p[i] + sys.log_probs()[s];
    out.log_r[i + 1] = out.log_r[i] + sys.log_ratios()[s];
  }
  return out;
}

}  // namespace

std::vector<double> local_dim_prefixes(const WeightedSystem& sys, const Word& word,
                                       std::span<const std::size_t> depths) {
  const PrefixSums sums = prefix_sums(sys, word);
  std::vector<double> out;
  out.reserve(depths.size());
  for (std::size_t d : depths) {
    if (d == 0 || d > word.size()) {
      throw Error(ErrorKind::PrefixTooShort, "depth " + std::to_string(d) +
                                                 " not available in a prefix of length " +
                                                 std::to_string(word.size()));
    }
    out.push_back(sums.log_p[d] / sums.log_r[d]);
  }
  return out;
}

AssouadEstimate assouad_estimate(const WeightedSystem& sys, const Word& word, std::size_t n_lo,
                                 std::size_t n_hi, std::size_t step) {
  if (n_lo == 0 || n_lo > n_hi || n_hi > word.size() || step == 0) {
    throw Error(ErrorKind::WindowRange,
                "window range [" + std::to_string(n_lo) + ", " + std::to_string(n_hi) +
                    "] invalid for a prefix of length " + std::to_string(word.size()));
  }
  const PrefixSums sums = prefix_sums(sys, word);
  AssouadEstimate out;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  out.step = step;
  const std::size_t count = (n_hi - n_lo) / step + 1;
  out.per_n_sup.resize(count);
  const std::size_t L = word.size();
  parallel_for(count, [&](std::size_t k) {
    const std::size_t n = n_lo + k * step;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + n <= L; ++i) {
      const double v = (sums.log_p[i + n] - sums.log_p[i]) / (sums.log_r[i + n] - sums.log_r[i]);
      best = std::max(best, v);
    }
    out.per_n_sup[k] = best;
  });
  const double cutoff = static_cast<double>(n_lo) + 0.75 * static_cast<double>(n_hi - n_lo);
  out.estimate = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < count; ++k) {
    if (static_cast<double>(out.window_length(k)) >= cutoff) {
      out.estimate = std::max(out.estimate, out.per_n_sup[k]);
    }
  }
  return out;
}

GreedyWordGenerator::GreedyWordGenerator(const WeightedSystem& sys, double alpha)
    : alpha_(alpha) {
  const auto [lo, hi] = alpha_bounds(sys);
  if (!(alpha >= lo - kAlphaSlack && alpha <= hi + kAlphaSlack)) {
    throw Error(ErrorKind::Domain, "greedy target " + std::to_string(alpha) + " outside [" +
                                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  low_ = Word{static_cast<Symbol>(argmin_symbol(sys))};
  high_ = Word{static_cast<Symbol>(argmax_symbol(sys))};
  low_log_p_ = sys.log_probs()[low_[0]];
  low_log_r_ = sys.log_ratios()[low_[0]];
  high_log_p_ = sys.log_probs()[high_[0]];
  high_log_r_ = sys.log_ratios()[high_[0]];
}

GreedyWordGenerator::GreedyWordGenerator(const WeightedSystem& sys, const BlockAlphabet& gamma,
                                         double alpha)
    : alpha_(alpha) {
  const double lo = gamma.alpha_min();
  const double hi = gamma.alpha_max();
  if (!(alpha >= lo - kAlphaSlack && alpha <= hi + kAlphaSlack)) {
    throw Error(ErrorKind::Domain, "greedy target " + std::to_string(alpha) +
                                       " outside the block alphabet's range [" +
                                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  low_ = gamma.argmin_block();
  high_ = gamma.argmax_block();
  const WordStats l = word_stats(sys, low_);
  const WordStats h = word_stats(sys, high_);
  low_log_p_ = l.log_p;
  low_log_r_ = l.log_r;
  high_log_p_ = h.log_p;
  high_log_r_ = h.log_r;
}

Word GreedyWordGenerator::next() {
  const bool take_high = !started_ || prefix_ratio() < alpha_;
  started_ = true;
  if (take_high) {
    log_p_ += high_log_p_;
    log_r_ += high_log_r_;
    return high_;
  }
  log_p_ += low_log_p_;
  log_r_ += low_log_r_;
  return low_;
}

Word greedy_word(const WeightedSystem& sys, double alpha, std::size_t length) {
  GreedyWordGenerator gen(sys, alpha);
  Word out;
  out.reserve(length);
  while (out.size() < length) out.append(gen.next());
  return out;
}

Word greedy_word(const WeightedSystem& sys, const BlockAlphabet& gamma, double alpha,
                 std::size_t block_count) {
  GreedyWordGenerator gen(sys, gamma, alpha);
  Word out;
  out.reserve(block_count * gamma.block_length());
  for (std::size_t k = 0; k < block_count; ++k) out.append(gen.next());
  return out;
}

Word sample_word(std::span<const double> probs, std::size_t length, std::uint64_t seed) {
  if (probs.empty()) throw Error(ErrorKind::Arity, "empty probability vector");
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] >= 0.0)) throw Error(ErrorKind::Range, "negative probability");
    acc += probs[i];
    cdf[i] = acc;
  }
  if (std::abs(acc - 1.0) > 1e-9) throw Error(ErrorKind::WeightSum, "probabilities must sum to 1");
  std::mt19937_64 gen(seed);
  Word out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    std::size_t s = 0;
    while (s + 1 < cdf.size() && (u >= cdf[s] || probs[s] == 0.0)) ++s;
    // Never land on a zero-probability trailing symbol.
    while (probs[s] == 0.0 && s > 0) --s;
    out.push_back(static_cast<Symbol>(s));
  }
  return out;
}

}  // namespace mfa
