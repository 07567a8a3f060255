#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mfa/system.hpp"
#include "mfa/types.hpp"
#include "mfa/word.hpp"

namespace mfa {

/// Maximum number of words ever materialised (m^n enumeration cap).
inline constexpr double kEnumerationCap = 1e7;

/// All blocks of one type inside a block alphabet. Blocks of the form u·kappa
/// share a type exactly when their free parts u do.
struct TypeGroup {
  std::vector<std::uint64_t> free_counts;  // symbol counts of the free part u
  TypeVector type;                         // type of the whole block u·kappa
  double log_count = 0.0;                  // log #blocks in the group
  double log_p = 0.0;                      // log p_a, constant on the group
  double log_r = 0.0;                      // log r_a, constant on the group

  double ratio() const { return log_p / log_r; }
};

/// Finite set of distinct words of a common length n, stored by type. The
/// base sequence is Gamma_n = { u·kappa : |u| = n - |kappa| } (kappa may be
/// empty, giving the full shift Sigma_n).
class BlockAlphabet {
 public:
  BlockAlphabet(std::size_t alphabet_size, std::size_t block_length, Word kappa,
                std::vector<TypeGroup> groups);

  /// Explicit block set; groups are derived by counting.
  static BlockAlphabet from_words(const WeightedSystem& sys, std::vector<Word> words);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t block_length() const noexcept { return block_length_; }
  const Word& kappa() const noexcept { return kappa_; }
  std::span<const TypeGroup> groups() const noexcept { return groups_; }
  bool empty() const noexcept { return groups_.empty(); }
  /// Number of blocks (as a double; it can exceed 2^64 at type level).
  double size() const;

  /// Materialised blocks, lexicographic within each group.
  /// Throws Error(SizeCap) beyond kEnumerationCap words.
  std::vector<Word> blocks() const;

  /// min / max of log p_a / log r_a over the blocks.
  double alpha_min() const;
  double alpha_max() const;
  /// Lexicographically first block attaining alpha_min / alpha_max.
  Word argmin_block() const;
  Word argmax_block() const;

 private:
  Word first_block(const TypeGroup& g) const;

  std::size_t alphabet_size_ = 0;
  std::size_t block_length_ = 0;
  Word kappa_;
  std::vector<TypeGroup> groups_;
  std::vector<Word> explicit_;  // non-empty only for from_words
};

/// Gamma_n(alpha) = { a in Gamma_n : H_p(type(a)) / lambda(type(a)) <= alpha }.
/// Works at type level; throws Error(SizeCap) when the number of types of the
/// free part exceeds kEnumerationCap.
BlockAlphabet gamma_n_alpha(const WeightedSystem& sys, std::size_t n, double alpha,
                            const Word& kappa = {});

/// The whole base Gamma_n (no alpha constraint).
BlockAlphabet base_blocks(const WeightedSystem& sys, std::size_t n, const Word& kappa = {});

/// Hausdorff dimension of Sigma(Gamma): the s with sum_a r_a^s = 1.
double subshift_dimension(const BlockAlphabet& gamma, double tol = 1e-12);

struct AbundanceReport {
  double a1_ratio_min = 0.0;   // min over realised types of #T_Gamma(q) / #T_n(q)
  bool a2_delta_dense = false;  // realised types delta-dense in the simplex (sup norm)
  double covering_radius = 0.0;  // max over the delta-net of the distance to a realised type
  std::size_t type_count = 0;
  std::size_t net_size = 0;
};

/// Abundance diagnostics for Gamma_n = { u·kappa }. Requires n > |kappa|.
AbundanceReport abundance_report(const WeightedSystem& sys, std::size_t n, double delta,
                                 const Word& kappa = {});

}  // namespace mfa
