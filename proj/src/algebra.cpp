#include "ntl/algebra.hpp"

#include <cstdlib>
#include <utility>

namespace ntl {

bool is_zero(const Word& w) {
  const auto& letters = w.letters();
  for (int i = 1; i <= w.rank(); ++i) {
    // gap = number of letters from {i-1, i+1} since the previous i,
    // or -1 before the first i.
    int gap = -1;
    for (int letter : letters) {
      if (letter == i) {
        if (gap >= 0 && gap < 2) return true;
        gap = 0;
      } else if (gap >= 0 && (letter == i - 1 || letter == i + 1)) {
        ++gap;
      }
    }
  }
  return false;
}

std::optional<NtlMonomial> canonical_form(const Word& w) {
  if (is_zero(w)) return std::nullopt;

  const auto& letters = w.letters();
  const std::size_t n = letters.size();
  std::vector<bool> emitted(n, false);
  std::vector<int> out;
  out.reserve(n);

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t p = 0; p < n; ++p) {
      if (emitted[p]) continue;
      bool available = true;
      for (std::size_t q = 0; q < p; ++q) {
        if (!emitted[q] && !commutes(letters[q], letters[p])) {
          available = false;
          break;
        }
      }
      if (available && (best == n || letters[p] < letters[best])) best = p;
    }
    emitted[best] = true;
    out.push_back(letters[best]);
  }
  return NtlMonomial(Word(std::move(out), w.rank()));
}

bool equivalent(const Word& a, const Word& b) {
  if (a.rank() != b.rank())
    throw InputError("cannot compare words of different rank");
  const auto ca = canonical_form(a);
  const auto cb = canonical_form(b);
  if (!ca || !cb) return !ca && !cb;
  return *ca == *cb;
}

std::string format_monomial(const NtlMonomial& m) {
  if (m.word().empty()) return "1";
  return format_word(m.word());
}

}  // namespace ntl
