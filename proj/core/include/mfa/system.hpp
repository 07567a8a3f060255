#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mfa/word.hpp"

namespace mfa {

/// Unvalidated system description, as read from a config file.
struct RawSystem {
  std::vector<double> probs;
  std::vector<double> ratios;
  std::optional<std::vector<double>> translations;
};

inline constexpr double kWeightSumTolerance = 1e-12;

/// Weighted similarity IFS on the line: maps x -> ratios[i] * x + translations[i]
/// with probability weights probs[i]. Only obtainable through validate_system.
class WeightedSystem {
 public:
  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  std::span<const double> ratios() const noexcept { return ratios_; }
  std::span<const double> log_probs() const noexcept { return log_probs_; }
  std::span<const double> log_ratios() const noexcept { return log_ratios_; }
  bool has_geometry() const noexcept { return translations_.has_value(); }
  /// Empty span when the system carries no geometry.
  std::span<const double> translations() const noexcept;
  /// log p_i / log r_i.
  double symbol_ratio(std::size_t i) const { return log_probs_[i] / log_ratios_[i]; }
  /// True iff log p_i / log r_i is the same for every symbol.
  bool degenerate() const noexcept { return degenerate_; }

  RawSystem raw() const;

 private:
  friend WeightedSystem validate_system(const RawSystem& raw);
  WeightedSystem() = default;

  std::vector<double> probs_;
  std::vector<double> ratios_;
  std::vector<double> log_probs_;
  std::vector<double> log_ratios_;
  std::optional<std::vector<double>> translations_;
  bool degenerate_ = false;
};

/// Checks arity, ranges, the weight sum (no renormalisation) and, when
/// translations are given, containment in [0,1] and interior disjointness.
WeightedSystem validate_system(const RawSystem& raw);

struct WordStats {
  double log_p = 0.0;
  double log_r = 0.0;
  double ratio = 0.0;  // log p_a / log r_a

  double p() const;
  double r() const;
};

/// Products over the word, carried in log space.
WordStats word_stats(const WeightedSystem& sys, const Word& word);

struct AlphaBounds {
  double min = 0.0;
  double max = 0.0;
};

/// Equal ends iff the system is degenerate.
AlphaBounds alpha_bounds(const WeightedSystem& sys);

/// FNV-1a over the bit patterns of probs, ratios and translations.
std::uint64_t system_fingerprint(const WeightedSystem& sys);

/// Index of the symbol with the smallest (largest) log p_i / log r_i; ties go
/// to the lowest index.
std::size_t argmin_symbol(const WeightedSystem& sys);
std::size_t argmax_symbol(const WeightedSystem& sys);

}  // namespace mfa
