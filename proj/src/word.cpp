#include "ntl/word.hpp"

#include <algorithm>
#include <cctype>

namespace ntl {

Word::Word(std::vector<int> letters, int rank)
    : letters_(std::move(letters)), rank_(rank) {
  if (rank_ < 0) throw InputError("rank must be nonnegative");
  for (int letter : letters_) {
    if (letter < 1 || letter > rank_)
      throw InputError("letter index " + std::to_string(letter) +
                       " out of range for rank " + std::to_string(rank_));
  }
}

bool lex_less(const Word& a, const Word& b) noexcept {
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end());
}

Word parse_word(std::string_view text, int rank) {
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (c == 'x' || c == 'X') ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected a generator index at position " +
                       std::to_string(i) + " of \"" + std::string(text) + "\"");
    int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("generator index too large");
      ++i;
    }
    letters.push_back(value);
  }
  return Word(std::move(letters), rank);
}

std::string format_word(const Word& w) {
  std::string out;
  for (int letter : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

}  // namespace ntl
