#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ntl/runs.hpp"

namespace ntl {

/// A mountain-range lattice path: up (NE) and down (SE) unit steps, never
/// dipping below the baseline and ending on it. Step k goes from abscissa k
/// to k+1; heights are the prefix sums.
class DyckPath {
 public:
  /// steps entries are +1 (up) or -1 (down); throws InputError if any prefix
  /// sum is negative or the total is nonzero.
  explicit DyckPath(std::vector<int> steps);

  const std::vector<int>& steps() const noexcept { return steps_; }
  int semilength() const noexcept {
    return static_cast<int>(steps_.size()) / 2;
  }

  /// Heights h(0..2m); h(x) is the height after x steps.
  std::vector<int> heights() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<int> steps_;
};

/// A peak apex. apex_x and apex_y share parity, apex_y <= apex_x, and
/// apex_x + apex_y <= 2m. Height-1 peaks are the trivial hills.
struct Hill {
  int apex_x = 0;
  int apex_y = 0;

  friend bool operator==(const Hill&, const Hill&) = default;
};

/// All local maxima (an up step immediately followed by a down step), left to
/// right, trivial hills included.
std::vector<Hill> peaks(const DyckPath& path);

/// The path of semilength rank+1 encoding rs. Each pair (p, r) contributes a
/// hill with apex (2p - r + 1, r + 1); the path is the upper envelope of the
/// full triangles under those apexes (feet on the baseline at apex_x ±
/// apex_y), with every baseline-level stretch tiled by unit hills. The
/// parity of the apexes makes every envelope step ±1 away from such
/// stretches, which is asserted.
DyckPath runs_to_dyck(const RunSequence& rs);

/// Inverse of runs_to_dyck: each nontrivial peak (a, b), b >= 2, yields the
/// pair ((a + b - 2) / 2, b - 1); trivial hills are skipped. The result is
/// validated (its validity for every path is a theorem; a violation throws).
/// The associated rank is semilength - 1.
RunSequence dyck_to_runs(const DyckPath& path);

/// Sum of the peak heights minus the number of peaks. Trivial hills
/// contribute zero; equals the degree of the corresponding monomial.
int peak_statistic(const DyckPath& path);

/// Interior abscissae 0 < x < 2m where the path height is zero. Each is
/// even, and generator x/2 is absent from the corresponding monomial.
std::vector<int> baseline_touches(const DyckPath& path);

/// Number of intersection points of the line x + y = 2k with the left sides
/// of the extended hills of rs (each hill prolonged to a full triangle with
/// feet on the baseline), excluding baseline points and apexes. Computed by
/// exact integer arithmetic on doubled coordinates; equals the number of
/// occurrences of the letter k in the encoded monomial.
int multiplicity_via_geometry(const RunSequence& rs, GeneratorIndex k);

/// Accepts 'U'/'D', '('/')' and '1'/'0' step characters, mixed, with
/// whitespace ignored.
DyckPath parse_dyck(std::string_view text);

/// Canonical "UUDD..." form.
std::string format_dyck(const DyckPath& path);

/// Plain-text mountain range drawn with '/' and '\', one row per height
/// level, topmost first. Empty string for the empty path.
std::string ascii_mountain(const DyckPath& path);

/// Standalone SVG document with the path as a polyline over a baseline.
std::string svg_mountain(const DyckPath& path);

}  // namespace ntl
