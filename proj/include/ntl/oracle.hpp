#pragma once

#include <cstddef>
#include <vector>

#include "ntl/enumerate.hpp"
#include "ntl/word.hpp"

// Definitional brute-force checks, used only for validation. Deliberately
// naive, and shares no algorithmic code with the modules it validates.
namespace ntl::oracle {

struct BfsOptions {
  std::size_t max_word_length = 12;
  std::size_t max_class_size = 1'000'000;
};

/// A full commutation class: every word reachable from the representative by
/// swapping adjacent letters with |i - j| > 1.
struct CommutationClass {
  Word representative;
  std::vector<Word> members;  // sorted lexicographically
};

/// Breadth-first closure of w under single commutation moves. Throws
/// InputError past max_word_length (or rank > 15) and CapExceeded past
/// max_class_size.
CommutationClass bfs_class(const Word& w, const BfsOptions& options = {});

/// True iff some member of the commutation class of w contains a factor
/// i.i, i.(i+1).i or (i+1).i.(i+1).
bool oracle_is_zero(const Word& w, const BfsOptions& options = {});

/// Basis of P_n by exhaustive word-space search: enumerate all words of each
/// length, discard zeros, and keep the lexicographically smallest member of
/// each commutation class. With max_len < 0, lengths grow until one yields
/// no nonzero word (a prefix of a nonzero word is nonzero, so that closes
/// the enumeration). Sorted lexicographically.
std::vector<Word> oracle_basis(int n, int max_len = -1,
                               const BfsOptions& options = {});

/// Histogram, by inversion count, of the 321-avoiding permutations of
/// {1, ..., n+1}, by enumeration of all (n+1)! permutations.
DegreeDistribution oracle_321_triangle(int n);

}  // namespace ntl::oracle
