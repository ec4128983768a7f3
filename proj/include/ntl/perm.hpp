#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ntl/algebra.hpp"

namespace ntl {

/// A permutation of {1, ..., n} in one-line notation: images()[k] is the
/// image of k+1.
class Permutation {
 public:
  /// Throws InputError unless images is a rearrangement of 1..images.size().
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const noexcept { return images_; }
  int image_of(int x) const { return images_.at(static_cast<std::size_t>(x) - 1); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Product of the adjacent transpositions s_i (swapping i and i+1) over the
/// letters of m, acting on {1, ..., rank+1}.
///
/// Composition convention: the rightmost letter acts first, i.e. the word
/// x_a x_b maps x to s_a(s_b(x)). The empty monomial maps to the identity.
Permutation monomial_to_permutation(const NtlMonomial& m);

/// Number of pairs i < j with p(i) > p(j).
int inversions(const Permutation& p);

/// True iff p has no strictly decreasing subsequence of length three.
bool is_321_avoiding(const Permutation& p);

/// Inverse of monomial_to_permutation on 321-avoiding permutations: extracts
/// a reduced word (repeatedly removing the leftmost descent), canonicalizes
/// it, and returns the monomial over rank size-1. Throws Not321Avoiding when
/// the precondition fails.
NtlMonomial permutation_to_monomial(const Permutation& p);

/// One-line notation, space- or comma-separated ("3 4 1 2").
Permutation parse_permutation(std::string_view text);

std::string format_permutation(const Permutation& p);

}  // namespace ntl
