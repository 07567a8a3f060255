#include "mfa/word.hpp"

#include <algorithm>
#include <charconv>

#include "mfa/error.hpp"

namespace mfa {

void Word::append(const Word& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, symbols_.size());
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + n));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, symbols_.size());
  len = std::min(len, symbols_.size() - pos);
  return Word(std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len));
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word eventually_periodic(const Word& pre_period, const Word& period, std::size_t length) {
  if (period.empty()) throw Error(ErrorKind::EmptyWord, "periodic part must be nonempty");
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(i < pre_period.size() ? pre_period[i]
                                        : period[(i - pre_period.size()) % period.size()]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw Error(ErrorKind::Parse, "invalid symbol '" + std::string(1, c) + "' in word");
      }
      out.push_back(static_cast<Symbol>(c - '1'));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value == 0 || value > 65535) {
      throw Error(ErrorKind::Parse, "invalid symbol '" + std::string(tok) + "' in word");
    }
    out.push_back(static_cast<Symbol>(value - 1));
    start = end + 1;
  }
  return out;
}

std::string format_word(const Word& word, std::size_t alphabet_size) {
  std::string out;
  if (alphabet_size <= 9) {
    out.reserve(word.size());
    for (Symbol s : word) out.push_back(static_cast<char>('1' + s));
    return out;
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(word[i] + 1);
  }
  return out;
}

}  // namespace mfa
