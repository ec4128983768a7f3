#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ntl/errors.hpp"

namespace ntl {

/// 1-based vertex index of a path-graph generator.
using GeneratorIndex = int;

/// True iff the generators indexed i and j commute, i.e. the vertices are not
/// adjacent on the path: |i - j| > 1.
constexpr bool commutes(GeneratorIndex i, GeneratorIndex j) noexcept {
  const int d = i - j;
  return d > 1 || d < -1;
}

/// A raw product of generators over a fixed rank n. The empty word is the
/// unit. A Word may be reducible (zero) or non-canonical; see algebra.hpp.
class Word {
 public:
  Word(std::vector<int> letters, int rank);

  const std::vector<int>& letters() const noexcept { return letters_; }
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
  int rank_ = 0;
};

/// Letters-only lexicographic order (numeric, left to right; a proper prefix
/// sorts first). Ranks are not compared.
bool lex_less(const Word& a, const Word& b) noexcept;

/// Accepts whitespace- or comma-separated indices ("3 2 1 4 3") as well as
/// the compact form "x3x2x1x4x3"; the two may be mixed. Whitespace-only
/// input denotes the empty word.
Word parse_word(std::string_view text, int rank);

/// Space-separated indices; the empty word renders as the empty string.
std::string format_word(const Word& w);

}  // namespace ntl
