#include "mfa/types.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mfa/error.hpp"

namespace mfa {

__extension__ using u128 = unsigned __int128;

TypeVector::TypeVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  length_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  if (counts_.empty() || length_ == 0) {
    throw Error(ErrorKind::EmptyWord, "type vector needs a positive total count");
  }
}

std::vector<double> TypeVector::freqs() const {
  std::vector<double> out(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) out[i] = freq(i);
  return out;
}

bool TypeVector::representable_with(std::uint64_t n) const {
  if (n == 0) return false;
  for (auto k : counts_) {
    if ((static_cast<u128>(k) * n) % length_ != 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> TypeVector::counts_for(std::uint64_t n) const {
  if (!representable_with(n)) {
    throw Error(ErrorKind::Denominator,
                "type with denominator " + std::to_string(length_) +
                    " is not representable with denominator " + std::to_string(n));
  }
  std::vector<std::uint64_t> out(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out[i] = static_cast<std::uint64_t>(static_cast<u128>(counts_[i]) * n / length_);
  }
  return out;
}

bool operator==(const TypeVector& a, const TypeVector& b) {
  if (a.counts_.size() != b.counts_.size()) return false;
  for (std::size_t i = 0; i < a.counts_.size(); ++i) {
    if (static_cast<u128>(a.counts_[i]) * b.length_ !=
        static_cast<u128>(b.counts_[i]) * a.length_) {
      return false;
    }
  }
  return true;
}

TypeVector type_of(const Word& word, std::size_t alphabet_size) {
  if (word.empty()) throw Error(ErrorKind::EmptyWord, "type of an empty word");
  std::vector<std::uint64_t> counts(alphabet_size, 0);
  for (Symbol s : word) {
    if (s >= alphabet_size) {
      throw Error(ErrorKind::Range, "symbol " + std::to_string(s + 1) + " outside alphabet");
    }
    ++counts[s];
  }
  return TypeVector(std::move(counts));
}

Entropies entropy_functionals(const WeightedSystem& sys, std::span<const double> q) {
  if (q.size() != sys.size()) {
    throw Error(ErrorKind::Arity, "probability vector length does not match the system");
  }
  Entropies out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    out.entropy -= q[i] * std::log(q[i]);
    out.cross_entropy -= q[i] * sys.log_probs()[i];
    out.lyapunov -= q[i] * sys.log_ratios()[i];
  }
  return out;
}

Entropies entropy_functionals(const WeightedSystem& sys, const TypeVector& q) {
  const auto f = q.freqs();
  return entropy_functionals(sys, f);
}

double log_multinomial(std::span<const std::uint64_t> counts) {
  std::uint64_t n = 0;
  double acc = 0.0;
  for (auto k : counts) {
    n += k;
    acc -= std::lgamma(static_cast<double>(k) + 1.0);
  }
  return acc + std::lgamma(static_cast<double>(n) + 1.0);
}

TypeClassCount type_class_log_count(std::uint64_t n, const TypeVector& q) {
  const auto counts = q.counts_for(n);
  const double dn = static_cast<double>(n);
  double h = 0.0;
  for (auto k : counts) {
    if (k == 0) continue;
    const double f = static_cast<double>(k) / dn;
    h -= f * std::log(f);
  }
  TypeClassCount out;
  out.exact_log = log_multinomial(counts);
  out.upper = dn * h;
  out.lower = dn * h - static_cast<double>(counts.size() + 1) * std::log(dn + 1.0);
  return out;
}

double composition_count(std::uint64_t n, std::size_t m) {
  if (m == 0) return n == 0 ? 1.0 : 0.0;
  // C(n + m - 1, m - 1)
  return std::exp(std::lgamma(static_cast<double>(n + m)) -
                  std::lgamma(static_cast<double>(m)) -
                  std::lgamma(static_cast<double>(n) + 1.0));
}

void for_each_composition(std::uint64_t n, std::size_t m,
                          const std::function<void(std::span<const std::uint64_t>)>& visit) {
  if (m == 0) return;
  std::vector<std::uint64_t> parts(m, 0);
  parts[m - 1] = n;
  // Lexicographic on parts[0..m-2]; the last part absorbs the remainder.
  while (true) {
    visit(parts);
    // advance
    std::size_t i = m - 1;
    while (i > 0) {
      --i;
      const std::uint64_t used =
          std::accumulate(parts.begin(), parts.begin() + static_cast<long>(i) + 1, std::uint64_t{0});
      if (used < n) {
        ++parts[i];
        for (std::size_t j = i + 1; j + 1 < m; ++j) parts[j] = 0;
        parts[m - 1] = n - (used + 1);
        break;
      }
      if (i == 0) return;
    }
    if (m == 1) return;
  }
}

}  // namespace mfa
