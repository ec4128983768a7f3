#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ntl/algebra.hpp"

namespace ntl {

/// One maximal decreasing run: the letters peak, peak-1, ..., peak-length+1.
/// The valley is the run's last letter, peak - length + 1.
struct RunPair {
  int peak = 0;
  int length = 0;

  int valley() const noexcept { return peak - length + 1; }

  friend bool operator==(const RunPair&, const RunPair&) = default;
};

/// The (peak, length) encoding of a canonical monomial. A sequence is valid
/// iff every length lies in [1, peak], peaks strictly increase, valleys
/// strictly increase, and no peak exceeds the rank. These are the only
/// constraints: every valid sequence is realized by exactly one monomial.
class RunSequence {
 public:
  /// Checks the constraints in a left-to-right scan (at each position:
  /// length range, then peaks, then valleys, then rank) and throws
  /// RunConstraintError naming the first violation.
  static RunSequence validate(const std::vector<std::pair<int, int>>& pairs,
                              int rank);

  const std::vector<RunPair>& pairs() const noexcept { return pairs_; }
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Sum of the run lengths; the degree of the encoded monomial.
  int degree() const noexcept;

  friend bool operator==(const RunSequence&, const RunSequence&) = default;

 private:
  RunSequence(std::vector<RunPair> pairs, int rank)
      : pairs_(std::move(pairs)), rank_(rank) {}

  std::vector<RunPair> pairs_;
  int rank_ = 0;
};

/// Splits a canonical word into its maximal decreasing runs.
RunSequence monomial_to_runs(const NtlMonomial& m);

// runs_to_monomial is declared in algebra.hpp: it concatenates, for each
// pair (p, r), the descending letters p, p-1, ..., p-r+1.

/// "(3,3)(4,2)"; the empty sequence renders as the empty string.
std::string format_runs(const RunSequence& rs);

/// Parses the "(3,3)(4,2)" form (whitespace tolerated) and validates.
RunSequence parse_runs(std::string_view text, int rank);

}  // namespace ntl
