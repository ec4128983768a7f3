#include "ntl/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>

namespace ntl::oracle {

namespace {

// Words are packed four bits per letter, first letter in the highest used
// nibble, so that numeric order on equal lengths is lexicographic order.
constexpr int kMaxPackedRank = 15;

std::uint64_t pack_word(const std::vector<int>& letters) {
  std::uint64_t bits = 0;
  for (int letter : letters)
    bits = (bits << 4) | static_cast<std::uint64_t>(letter);
  return bits;
}

std::vector<int> unpack_word(std::uint64_t bits, int length) {
  std::vector<int> letters(static_cast<std::size_t>(length));
  for (int k = length - 1; k >= 0; --k) {
    letters[static_cast<std::size_t>(k)] = static_cast<int>(bits & 0xF);
    bits >>= 4;
  }
  return letters;
}

bool has_forbidden_factor(std::uint64_t bits, int length) {
  int before_previous = -1;
  int previous = -1;
  for (int k = 0; k < length; ++k) {
    const int current =
        static_cast<int>((bits >> (4 * (length - 1 - k))) & 0xF);
    if (current == previous) return true;
    if (current == before_previous &&
        (previous == current + 1 || previous == current - 1))
      return true;
    before_previous = previous;
    previous = current;
  }
  return false;
}

void check_caps(const Word& w, const BfsOptions& options) {
  if (w.size() > options.max_word_length)
    throw InputError("word length " + std::to_string(w.size()) +
                     " exceeds the search cap " +
                     std::to_string(options.max_word_length));
  if (w.rank() > kMaxPackedRank)
    throw InputError("word-space search supports rank at most " +
                     std::to_string(kMaxPackedRank));
}

struct ScanResult {
  bool zero = false;
  std::uint64_t lex_min = 0;
};

// Breadth-first closure under single commutation moves. With
// stop_on_factor, returns as soon as any reached word contains a forbidden
// factor; otherwise explores the full class. Visited words are appended to
// *members when given.
ScanResult scan_class(std::uint64_t start, int length,
                      const BfsOptions& options, bool stop_on_factor,
                      std::vector<std::uint64_t>* members) {
  ScanResult result;
  result.lex_min = start;
  if (stop_on_factor && has_forbidden_factor(start, length)) {
    result.zero = true;
    return result;
  }
  std::unordered_set<std::uint64_t> visited{start};
  std::vector<std::uint64_t> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t word = queue[head];
    for (int k = 0; k + 1 < length; ++k) {
      const int shift = 4 * (length - 1 - k);
      const int left = static_cast<int>((word >> shift) & 0xF);
      const int right = static_cast<int>((word >> (shift - 4)) & 0xF);
      const int d = left - right;
      if (d <= 1 && d >= -1) continue;
      const std::uint64_t toggle = static_cast<std::uint64_t>(left ^ right);
      const std::uint64_t swapped =
          word ^ (toggle << shift) ^ (toggle << (shift - 4));
      if (!visited.insert(swapped).second) continue;
      if (visited.size() > options.max_class_size)
        throw CapExceeded("commutation class exceeds " +
                          std::to_string(options.max_class_size) + " members");
      if (stop_on_factor && has_forbidden_factor(swapped, length)) {
        result.zero = true;
        return result;
      }
      if (swapped < result.lex_min) result.lex_min = swapped;
      queue.push_back(swapped);
    }
  }
  if (members) *members = std::move(queue);
  return result;
}

}  // namespace

CommutationClass bfs_class(const Word& w, const BfsOptions& options) {
  check_caps(w, options);
  const int length = static_cast<int>(w.size());
  std::vector<std::uint64_t> packed;
  scan_class(pack_word(w.letters()), length, options, false, &packed);
  std::sort(packed.begin(), packed.end());
  CommutationClass result{w, {}};
  result.members.reserve(packed.size());
  for (std::uint64_t bits : packed)
    result.members.emplace_back(unpack_word(bits, length), w.rank());
  return result;
}

bool oracle_is_zero(const Word& w, const BfsOptions& options) {
  check_caps(w, options);
  return scan_class(pack_word(w.letters()), static_cast<int>(w.size()),
                    options, true, nullptr)
      .zero;
}

std::vector<Word> oracle_basis(int n, int max_len, const BfsOptions& options) {
  if (n < 0) throw InputError("rank must be nonnegative");
  if (n > kMaxPackedRank)
    throw InputError("word-space search supports rank at most " +
                     std::to_string(kMaxPackedRank));

  std::set<std::vector<int>> representatives;
  for (int length = 0; max_len < 0 || length <= max_len; ++length) {
    if (static_cast<std::size_t>(length) > options.max_word_length)
      throw InputError("basis search would exceed the word-length cap " +
                       std::to_string(options.max_word_length));
    bool found_nonzero = false;
    if (length == 0) {
      representatives.insert(std::vector<int>{});
      found_nonzero = true;
    } else if (n >= 1) {
      std::vector<int> letters(static_cast<std::size_t>(length), 1);
      for (;;) {
        const ScanResult scan =
            scan_class(pack_word(letters), length, options, true, nullptr);
        if (!scan.zero) {
          found_nonzero = true;
          representatives.insert(unpack_word(scan.lex_min, length));
        }
        int k = length - 1;
        while (k >= 0 && letters[static_cast<std::size_t>(k)] == n) {
          letters[static_cast<std::size_t>(k)] = 1;
          --k;
        }
        if (k < 0) break;
        ++letters[static_cast<std::size_t>(k)];
      }
    }
    if (max_len < 0 && !found_nonzero) break;
  }

  std::vector<Word> basis;
  basis.reserve(representatives.size());
  for (const auto& letters : representatives) basis.emplace_back(letters, n);
  return basis;
}

DegreeDistribution oracle_321_triangle(int n) {
  if (n < 0) throw InputError("rank must be nonnegative");
  std::vector<int> images(static_cast<std::size_t>(n) + 1);
  std::iota(images.begin(), images.end(), 1);

  DegreeDistribution distribution{n, {}};
  do {
    // Naive pattern scan over all index triples.
    bool avoiding = true;
    for (std::size_t i = 0; avoiding && i < images.size(); ++i)
      for (std::size_t j = i + 1; avoiding && j < images.size(); ++j)
        for (std::size_t k = j + 1; avoiding && k < images.size(); ++k)
          if (images[i] > images[j] && images[j] > images[k]) avoiding = false;
    if (!avoiding) continue;

    std::size_t inversion_count = 0;
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        if (images[i] > images[j]) ++inversion_count;

    if (distribution.counts.size() <= inversion_count)
      distribution.counts.resize(inversion_count + 1, 0);
    ++distribution.counts[inversion_count];
  } while (std::next_permutation(images.begin(), images.end()));
  return distribution;
}

}  // namespace ntl::oracle
