#pragma once

#include <optional>
#include <string>

#include "ntl/word.hpp"

namespace ntl {

class RunSequence;
class NtlMonomial;

/// Whether w is equivalent to zero under the defining relations
/// (x_i^2 = 0, x_i x_j = x_j x_i for |i-j| > 1, x_i x_{i+1} x_i = 0,
/// x_{i+1} x_i x_{i+1} = 0).
///
/// Decided by a local criterion: w is zero iff for some index i, two
/// consecutive occurrences of i have fewer than two letters from
/// {i-1, i+1} between them. Commutation moves can neither carry a letter
/// of index i-1 or i+1 past an occurrence of i nor reorder equal letters,
/// so those gap counts are invariants of the commutation class, and a gap
/// of 0 or 1 is exactly what allows a factor i.i or i.(i±1).i to form.
bool is_zero(const Word& w);

std::optional<NtlMonomial> canonical_form(const Word& w);
NtlMonomial runs_to_monomial(const RunSequence& rs);

/// A nonzero basis element: the lexicographically smallest irreducible word
/// of its commutation class. Instances are only produced by canonical_form
/// and runs_to_monomial, so the invariant holds by construction. The empty
/// monomial (degree 0) is the unit.
class NtlMonomial {
 public:
  const Word& word() const noexcept { return word_; }
  int rank() const noexcept { return word_.rank(); }
  int degree() const noexcept { return static_cast<int>(word_.size()); }

  friend bool operator==(const NtlMonomial&, const NtlMonomial&) = default;

 private:
  explicit NtlMonomial(Word w) : word_(std::move(w)) {}
  friend std::optional<NtlMonomial> canonical_form(const Word&);
  friend NtlMonomial runs_to_monomial(const RunSequence&);

  Word word_;
};

/// Canonical form of w, or nullopt when w is zero.
///
/// Greedy trace normal form: repeatedly emit the smallest-index letter among
/// those with no earlier unemitted letter failing to commute with it. Two
/// equal letters are never simultaneously emittable (they do not commute with
/// each other), so the greedy choice is unambiguous.
std::optional<NtlMonomial> canonical_form(const Word& w);

/// True iff both words are zero, or both are nonzero with equal canonical
/// forms. Throws InputError on rank mismatch.
bool equivalent(const Word& a, const Word& b);

/// "1" for the unit, otherwise space-separated indices.
std::string format_monomial(const NtlMonomial& m);

}  // namespace ntl
