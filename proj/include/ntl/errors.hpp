#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ntl {

/// Invalid caller input: out-of-range generator index, rank mismatch, bad n.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed text in one of the accepted input formats.
struct ParseError : InputError {
  using InputError::InputError;
};

/// Structural constraints a run sequence must satisfy, in the order they are
/// checked at each position.
enum class RunConstraint {
  LengthExceedsPeak,
  PeaksNotIncreasing,
  ValleysNotIncreasing,
  PeakExceedsRank,
};

const char* to_string(RunConstraint c) noexcept;

/// Run-sequence validation failure. Names the first violated constraint in a
/// left-to-right scan and the offending pair position (0-based).
struct RunConstraintError : InputError {
  RunConstraintError(RunConstraint constraint_, std::size_t position_,
                     const std::string& message)
      : InputError(message), constraint(constraint_), position(position_) {}

  RunConstraint constraint;
  std::size_t position;
};

/// The permutation contains a strictly decreasing subsequence of length
/// three, so it corresponds to no nonzero monomial.
struct Not321Avoiding : InputError {
  using InputError::InputError;
};

/// A brute-force class search outgrew its configured resource cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ntl
