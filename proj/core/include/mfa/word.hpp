#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mfa {

using Symbol = std::uint16_t;

/// Finite word over the alphabet {0, ..., m-1}.
///
/// Symbols are stored zero-based; the textual form used in files and on the
/// command line is one-based ("1212..."), see parse_word / format_word.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void append(const Word& other);
  void reserve(std::size_t n) { symbols_.reserve(n); }

  /// First n symbols; n is clamped to the word length.
  Word prefix(std::size_t n) const;
  /// Symbols [pos, pos + len).
  Word subword(std::size_t pos, std::size_t len) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

Word concat(const Word& a, const Word& b);

/// u followed by v repeated, truncated to `length` symbols.
Word eventually_periodic(const Word& pre_period, const Word& period, std::size_t length);

/// Parses "1212" (one digit per symbol) or "1,12,3" (comma separated).
/// Symbols are one-based in text. Throws Error(Parse) on malformed input.
Word parse_word(std::string_view text);

/// Digits for alphabets of size <= 9, comma-separated integers otherwise.
std::string format_word(const Word& word, std::size_t alphabet_size);

}  // namespace mfa
