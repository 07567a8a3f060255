#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mfa/system.hpp"
#include "mfa/word.hpp"

namespace mfa {

/// Empirical symbol frequencies k_i / n of a finite word, kept as integer
/// counts so that type identity is exact.
class TypeVector {
 public:
  /// Counts must be nonempty with a positive total.
  explicit TypeVector(std::vector<std::uint64_t> counts);

  std::size_t alphabet_size() const noexcept { return counts_.size(); }
  /// Denominator n = sum of counts.
  std::uint64_t length() const noexcept { return length_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t count(std::size_t i) const { return counts_[i]; }
  double freq(std::size_t i) const {
    return static_cast<double>(counts_[i]) / static_cast<double>(length_);
  }
  std::vector<double> freqs() const;

  /// Counts over denominator n when every k_i * n / length() is an integer.
  bool representable_with(std::uint64_t n) const;
  std::vector<std::uint64_t> counts_for(std::uint64_t n) const;

  /// Rational equality: (1,1) over 2 equals (2,2) over 4.
  friend bool operator==(const TypeVector& a, const TypeVector& b);

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t length_ = 0;
};

TypeVector type_of(const Word& word, std::size_t alphabet_size);

struct Entropies {
  double entropy = 0.0;        // H(q) = -sum q_i log q_i
  double cross_entropy = 0.0;  // H_p(q) = -sum q_i log p_i
  double lyapunov = 0.0;       // lambda(q) = -sum q_i log r_i
};

/// Uses 0 log 0 = 0.
Entropies entropy_functionals(const WeightedSystem& sys, std::span<const double> q);
Entropies entropy_functionals(const WeightedSystem& sys, const TypeVector& q);

struct TypeClassCount {
  double exact_log = 0.0;  // log of the multinomial coefficient
  double lower = 0.0;      // n H(q) - (m + 1) log(n + 1)
  double upper = 0.0;      // n H(q)
};

/// Size of the type class T_n(q) in Sigma_n and its entropy bounds.
/// Throws Error(Denominator) when q is not a type of length n.
TypeClassCount type_class_log_count(std::uint64_t n, const TypeVector& q);

/// log of n! / (k_1! ... k_m!).
double log_multinomial(std::span<const std::uint64_t> counts);

/// Number of compositions of n into m nonnegative parts, as a double.
double composition_count(std::uint64_t n, std::size_t m);

/// Visits every composition of n into m parts in lexicographic order.
void for_each_composition(std::uint64_t n, std::size_t m,
                          const std::function<void(std::span<const std::uint64_t>)>& visit);

}  // namespace mfa
