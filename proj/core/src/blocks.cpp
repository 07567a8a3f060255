#include "mfa/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "mfa/error.hpp"
#include "numeric.hpp"

namespace mfa {
namespace {

constexpr double kRatioSlack = 1e-12;

std::vector<std::uint64_t> kappa_counts(const Word& kappa, std::size_t m) {
  std::vector<std::uint64_t> out(m, 0);
  for (Symbol s : kappa) {
    if (s >= m) throw Error(ErrorKind::Range, "kappa uses a symbol outside the alphabet");
    ++out[s];
  }
  return out;
}

TypeGroup make_group(const WeightedSystem& sys, std::span<const std::uint64_t> free_counts,
                     std::span<const std::uint64_t> suffix_counts) {
  const std::size_t m = sys.size();
  std::vector<std::uint64_t> total(m);
  double lp = 0.0;
  double lr = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    total[i] = free_counts[i] + suffix_counts[i];
    lp += static_cast<double>(total[i]) * sys.log_probs()[i];
    lr += static_cast<double>(total[i]) * sys.log_ratios()[i];
  }
  return TypeGroup{std::vector<std::uint64_t>(free_counts.begin(), free_counts.end()),
                   TypeVector(std::move(total)), log_multinomial(free_counts), lp, lr};
}

template <typename Keep>
BlockAlphabet build_level(const WeightedSystem& sys, std::size_t n, const Word& kappa, Keep keep) {
  if (n <= kappa.size()) {
    throw Error(ErrorKind::Domain, "block length " + std::to_string(n) +
                                       " must exceed |kappa| = " + std::to_string(kappa.size()));
  }
  const std::size_t m = sys.size();
  const std::uint64_t free_len = n - kappa.size();
  if (composition_count(free_len, m) > kEnumerationCap) {
    throw Error(ErrorKind::SizeCap, "too many types for n = " + std::to_string(n));
  }
  const auto suffix = kappa_counts(kappa, m);
  std::vector<TypeGroup> groups;
  for_each_composition(free_len, m, [&](std::span<const std::uint64_t> c) {
    TypeGroup g = make_group(sys, c, suffix);
    if (keep(g)) groups.push_back(std::move(g));
  });
  return BlockAlphabet(m, n, kappa, std::move(groups));
}

}  // namespace

BlockAlphabet::BlockAlphabet(std::size_t alphabet_size, std::size_t block_length, Word kappa,
                             std::vector<TypeGroup> groups)
    : alphabet_size_(alphabet_size),
      block_length_(block_length),
      kappa_(std::move(kappa)),
      groups_(std::move(groups)) {}

BlockAlphabet BlockAlphabet::from_words(const WeightedSystem& sys, std::vector<Word> words) {
  if (words.empty()) throw Error(ErrorKind::EmptyAlphabet, "block alphabet has no blocks");
  const std::size_t n = words.front().size();
  if (n == 0) throw Error(ErrorKind::EmptyWord, "blocks must be nonempty");
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
    throw Error(ErrorKind::Domain, "blocks must be distinct");
  }
  std::map<std::vector<std::uint64_t>, std::uint64_t> by_type;
  for (const Word& w : words) {
    if (w.size() != n) throw Error(ErrorKind::Arity, "blocks must share one length");
    const TypeVector t = type_of(w, sys.size());
    ++by_type[std::vector<std::uint64_t>(t.counts().begin(), t.counts().end())];
  }
  const std::vector<std::uint64_t> no_suffix(sys.size(), 0);
  std::vector<TypeGroup> groups;
  for (const auto& [counts, multiplicity] : by_type) {
    TypeGroup g = make_group(sys, counts, no_suffix);
    g.log_count = std::log(static_cast<double>(multiplicity));
    groups.push_back(std::move(g));
  }
  BlockAlphabet out(sys.size(), n, Word{}, std::move(groups));
  out.explicit_ = std::move(words);
  return out;
}

double BlockAlphabet::size() const {
  double total = 0.0;
  for (const auto& g : groups_) total += std::exp(g.log_count);
  return total;
}

Word BlockAlphabet::first_block(const TypeGroup& g) const {
  if (!explicit_.empty()) {
    for (const Word& w : explicit_) {
      if (type_of(w, alphabet_size_) == g.type) return w;
    }
  }
  Word out;
  out.reserve(block_length_);
  for (std::size_t s = 0; s < g.free_counts.size(); ++s) {
    for (std::uint64_t k = 0; k < g.free_counts[s]; ++k) out.push_back(static_cast<Symbol>(s));
  }
  out.append(kappa_);
  return out;
}

std::vector<Word> BlockAlphabet::blocks() const {
  if (!explicit_.empty()) return explicit_;
  if (size() > kEnumerationCap) {
    throw Error(ErrorKind::SizeCap, "refusing to materialise more than 1e7 blocks");
  }
  std::vector<Word> out;
  for (const auto& g : groups_) {
    std::vector<Symbol> free;
    for (std::size_t s = 0; s < g.free_counts.size(); ++s) {
      free.insert(free.end(), g.free_counts[s], static_cast<Symbol>(s));
    }
    do {
      Word w{std::vector<Symbol>(free)};
      w.append(kappa_);
      out.push_back(std::move(w));
    } while (std::next_permutation(free.begin(), free.end()));
  }
  return out;
}

double BlockAlphabet::alpha_min() const {
  if (groups_.empty()) throw Error(ErrorKind::EmptyAlphabet, "empty block alphabet");
  double best = groups_.front().ratio();
  for (const auto& g : groups_) best = std::min(best, g.ratio());
  return best;
}

double BlockAlphabet::alpha_max() const {
  if (groups_.empty()) throw Error(ErrorKind::EmptyAlphabet, "empty block alphabet");
  double best = groups_.front().ratio();
  for (const auto& g : groups_) best = std::max(best, g.ratio());
  return best;
}

Word BlockAlphabet::argmin_block() const {
  const double target = alpha_min();
  std::vector<Word> candidates;
  for (const auto& g : groups_) {
    if (g.ratio() == target) candidates.push_back(first_block(g));
  }
  return *std::min_element(candidates.begin(), candidates.end());
}

Word BlockAlphabet::argmax_block() const {
  const double target = alpha_max();
  std::vector<Word> candidates;
  for (const auto& g : groups_) {
    if (g.ratio() == target) candidates.push_back(first_block(g));
  }
  return *std::min_element(candidates.begin(), candidates.end());
}

BlockAlphabet gamma_n_alpha(const WeightedSystem& sys, std::size_t n, double alpha,
                            const Word& kappa) {
  const double bound = alpha + kRatioSlack * std::max(1.0, std::abs(alpha));
  return build_level(sys, n, kappa, [bound](const TypeGroup& g) { return g.ratio() <= bound; });
}

BlockAlphabet base_blocks(const WeightedSystem& sys, std::size_t n, const Word& kappa) {
  return build_level(sys, n, kappa, [](const TypeGroup&) { return true; });
}

double subshift_dimension(const BlockAlphabet& gamma, double tol) {
  if (gamma.empty()) throw Error(ErrorKind::EmptyAlphabet, "subshift of an empty alphabet");
  const auto groups = gamma.groups();
  std::vector<double> terms(groups.size());
  double root = 0.0;
  const bool ok = detail::bisect_decreasing(
      [&](double s) {
        for (std::size_t i = 0; i < groups.size(); ++i) {
          terms[i] = groups[i].log_count + s * groups[i].log_r;
        }
        return detail::log_sum_exp(terms);
      },
      [tol](double, double, double width) { return width <= tol; }, root);
  if (!ok) throw Error(ErrorKind::Bracket, "subshift dimension could not be bracketed");
  return root;
}

AbundanceReport abundance_report(const WeightedSystem& sys, std::size_t n, double delta,
                                 const Word& kappa) {
  if (n <= kappa.size()) {
    throw Error(ErrorKind::Domain, "n must exceed |kappa| (no free symbols otherwise)");
  }
  if (!(delta > 0.0 && delta <= 1.0)) throw Error(ErrorKind::Domain, "delta must be in (0, 1]");
  const std::size_t m = sys.size();
  const std::uint64_t free_len = n - kappa.size();
  if (composition_count(free_len, m) > kEnumerationCap) {
    throw Error(ErrorKind::SizeCap, "too many types for n = " + std::to_string(n));
  }
  const auto suffix = kappa_counts(kappa, m);

  AbundanceReport report;
  report.a1_ratio_min = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> realised;
  for_each_composition(free_len, m, [&](std::span<const std::uint64_t> c) {
    std::vector<std::uint64_t> total(m);
    std::vector<double> point(m);
    for (std::size_t i = 0; i < m; ++i) {
      total[i] = c[i] + suffix[i];
      point[i] = static_cast<double>(total[i]) / static_cast<double>(n);
    }
    const double ratio = std::exp(log_multinomial(c) - log_multinomial(total));
    report.a1_ratio_min = std::min(report.a1_ratio_min, ratio);
    realised.push_back(std::move(point));
  });
  report.type_count = realised.size();

  // Net of types with denominator g: every simplex point lies within 1/g <= delta/2
  // (sup norm) of a net point, so a net covering radius <= delta/2 certifies density.
  const auto g = static_cast<std::uint64_t>(std::ceil(2.0 / delta));
  const double net_points = composition_count(g, m);
  if (net_points * static_cast<double>(realised.size()) > 1e8) {
    throw Error(ErrorKind::SizeCap, "delta-net check too large");
  }
  double radius = 0.0;
  for_each_composition(g, m, [&](std::span<const std::uint64_t> c) {
    ++report.net_size;
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& t : realised) {
      double d = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        d = std::max(d, std::abs(static_cast<double>(c[i]) / static_cast<double>(g) - t[i]));
      }
      nearest = std::min(nearest, d);
    }
    radius = std::max(radius, nearest);
  });
  report.covering_radius = radius;
  report.a2_delta_dense = radius <= 0.5 * delta + 1e-12;
  return report;
}

}  // namespace mfa
