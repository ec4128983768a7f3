#include "ntl/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ntl {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int value : images_) {
    if (value < 1 || value > static_cast<int>(images_.size()) ||
        seen[static_cast<std::size_t>(value) - 1])
      throw InputError("not a permutation of 1.." +
                       std::to_string(images_.size()));
    seen[static_cast<std::size_t>(value) - 1] = true;
  }
}

Permutation Permutation::identity(int size) {
  if (size < 0) throw InputError("permutation size must be nonnegative");
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation monomial_to_permutation(const NtlMonomial& m) {
  std::vector<int> images(static_cast<std::size_t>(m.rank()) + 1);
  std::iota(images.begin(), images.end(), 1);
  // Right-to-left action: appending s_i on the right of the product swaps
  // the entries at positions i, i+1 of the one-line notation.
  for (int letter : m.word().letters())
    std::swap(images[static_cast<std::size_t>(letter) - 1],
              images[static_cast<std::size_t>(letter)]);
  return Permutation(std::move(images));
}

int inversions(const Permutation& p) {
  const auto& images = p.images();
  int count = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++count;
  return count;
}

bool is_321_avoiding(const Permutation& p) {
  const auto& images = p.images();
  const std::size_t n = images.size();
  // p(i) > p(j) > p(k) exists iff some j has a larger value before it and a
  // smaller value after it.
  std::vector<int> min_after(n + 1, std::numeric_limits<int>::max());
  for (std::size_t j = n; j-- > 0;)
    min_after[j] = std::min(min_after[j + 1], images[j]);
  int max_before = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (max_before > images[j] && images[j] > min_after[j + 1]) return false;
    max_before = std::max(max_before, images[j]);
  }
  return true;
}

NtlMonomial permutation_to_monomial(const Permutation& p) {
  if (!is_321_avoiding(p))
    throw Not321Avoiding("permutation " + format_permutation(p) +
                         " contains the pattern 321");
  if (p.size() < 1)
    throw InputError("permutation must act on at least one element");

  // Multiply away the leftmost descent until the identity remains. The
  // letters come out in reverse word order: if p * s_{i_1} * ... * s_{i_k}
  // is the identity then p = s_{i_k} ... s_{i_1}.
  std::vector<int> images = p.images();
  std::vector<int> reversed_letters;
  for (;;) {
    std::size_t descent = images.size();
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
      if (images[i] > images[i + 1]) {
        descent = i;
        break;
      }
    }
    if (descent == images.size()) break;
    reversed_letters.push_back(static_cast<int>(descent) + 1);
    std::swap(images[descent], images[descent + 1]);
  }
  std::reverse(reversed_letters.begin(), reversed_letters.end());

  const auto monomial =
      canonical_form(Word(std::move(reversed_letters), p.size() - 1));
  if (!monomial)
    throw std::logic_error(
        "reduced word of a 321-avoiding permutation reduced to zero");
  return *monomial;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> images;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected an integer at position " + std::to_string(i));
    int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("permutation entry too large");
      ++i;
    }
    images.push_back(value);
  }
  if (images.empty()) throw ParseError("empty permutation");
  return Permutation(std::move(images));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int value : p.images()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(value);
  }
  return out;
}

}  // namespace ntl
