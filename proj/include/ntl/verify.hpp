#pragma once

#include <iosfwd>

namespace ntl {

struct VerifyOptions {
  /// Also run the word-space brute-force checks (capped at rank 5,
  /// word length 10).
  bool with_oracle = false;
};

/// Runs the full cross-check suite for P_n: the Catalan dimension identity,
/// basis integrity, run/Dyck round trips, the peak-statistic theorem, the
/// permutation correspondence (with the inversion triangle for n <= 7), the
/// multiplicity and baseline properties, and optionally the brute-force
/// comparisons. Passing checks are reported one per line on `out`; the first
/// failure is reported on `err` and stops the run. Returns overall success.
bool verify_claims(int n, const VerifyOptions& options, std::ostream& out,
                   std::ostream& err);

}  // namespace ntl
