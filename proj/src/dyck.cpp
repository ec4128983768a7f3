#include "ntl/dyck.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace ntl {

DyckPath::DyckPath(std::vector<int> steps) : steps_(std::move(steps)) {
  int height = 0;
  for (int step : steps_) {
    if (step != 1 && step != -1)
      throw InputError("path steps must be +1 or -1");
    height += step;
    if (height < 0) throw InputError("path dips below the baseline");
  }
  if (height != 0) throw InputError("path must end on the baseline");
}

std::vector<int> DyckPath::heights() const {
  std::vector<int> h;
  h.reserve(steps_.size() + 1);
  h.push_back(0);
  int height = 0;
  for (int step : steps_) h.push_back(height += step);
  return h;
}

std::vector<Hill> peaks(const DyckPath& path) {
  std::vector<Hill> out;
  const auto& steps = path.steps();
  int height = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    height += steps[k];
    if (steps[k] == 1 && k + 1 < steps.size() && steps[k + 1] == -1)
      out.push_back(Hill{static_cast<int>(k) + 1, height});
  }
  return out;
}

DyckPath runs_to_dyck(const RunSequence& rs) {
  const int width = 2 * (rs.rank() + 1);
  std::vector<int> envelope(static_cast<std::size_t>(width) + 1, 0);
  for (const RunPair& pair : rs.pairs()) {
    const int apex_x = 2 * pair.peak - pair.length + 1;
    const int apex_y = pair.length + 1;
    // Full triangle under the apex; its feet 2(valley-1) and 2(peak+1) lie
    // inside [0, width] for a validated sequence.
    for (int x = apex_x - apex_y; x <= apex_x + apex_y; ++x) {
      const int y = apex_y - std::abs(x - apex_x);
      envelope[static_cast<std::size_t>(x)] =
          std::max(envelope[static_cast<std::size_t>(x)], y);
    }
  }
  std::vector<int> steps;
  steps.reserve(static_cast<std::size_t>(width));
  for (int x = 0; x < width; ++x) {
    const int d = envelope[static_cast<std::size_t>(x) + 1] -
                  envelope[static_cast<std::size_t>(x)];
    if (d == 1 || d == -1) {
      steps.push_back(d);
    } else {
      // Apex abscissa and height share parity, so the envelope can only be
      // level where it sits on the baseline; such stretches have even
      // endpoints and are tiled with unit hills.
      if (d != 0 || envelope[static_cast<std::size_t>(x)] != 0)
        throw std::logic_error("hill envelope is not a unit-step mountain");
      steps.push_back(x % 2 == 0 ? 1 : -1);
    }
  }
  return DyckPath(std::move(steps));
}

RunSequence dyck_to_runs(const DyckPath& path) {
  std::vector<std::pair<int, int>> pairs;
  for (const Hill& hill : peaks(path))
    if (hill.apex_y >= 2)
      pairs.emplace_back((hill.apex_x + hill.apex_y - 2) / 2, hill.apex_y - 1);
  return RunSequence::validate(pairs, path.semilength() - 1);
}

int peak_statistic(const DyckPath& path) {
  int total = 0;
  for (const Hill& hill : peaks(path)) total += hill.apex_y - 1;
  return total;
}

std::vector<int> baseline_touches(const DyckPath& path) {
  std::vector<int> out;
  const auto& steps = path.steps();
  int height = 0;
  for (std::size_t x = 1; x < steps.size(); ++x) {
    height += steps[x - 1];
    if (height == 0) out.push_back(static_cast<int>(x));
  }
  return out;
}

int multiplicity_via_geometry(const RunSequence& rs, GeneratorIndex k) {
  if (k < 1 || k > rs.rank())
    throw InputError("generator index " + std::to_string(k) +
                     " out of range for rank " + std::to_string(rs.rank()));
  int count = 0;
  for (const RunPair& pair : rs.pairs()) {
    const long long a = 2 * pair.peak - pair.length + 1;
    const long long b = pair.length + 1;
    // The left side climbs from the foot (a-b, 0) to the apex (a, b) with
    // slope 1; it meets x + y = 2k at doubled abscissa 2x = 2k + (a - b).
    // Count crossings strictly between foot and apex.
    const long long doubled_x = 2LL * k + (a - b);
    if (2 * (a - b) < doubled_x && doubled_x < 2 * a) ++count;
  }
  return count;
}

DyckPath parse_dyck(std::string_view text) {
  std::vector<int> steps;
  for (char c : text) {
    switch (c) {
      case 'U': case '(': case '1':
        steps.push_back(1);
        break;
      case 'D': case ')': case '0':
        steps.push_back(-1);
        break;
      default:
        if (!std::isspace(static_cast<unsigned char>(c)))
          throw ParseError(std::string("invalid path character '") + c + "'");
    }
  }
  return DyckPath(std::move(steps));
}

std::string format_dyck(const DyckPath& path) {
  std::string out;
  out.reserve(path.steps().size());
  for (int step : path.steps()) out += step == 1 ? 'U' : 'D';
  return out;
}

std::string ascii_mountain(const DyckPath& path) {
  const auto& steps = path.steps();
  const auto h = path.heights();
  const int top = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
  std::string out;
  for (int row = top; row >= 1; --row) {
    std::string line(steps.size(), ' ');
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (steps[k] == 1 && h[k + 1] == row)
        line[k] = '/';
      else if (steps[k] == -1 && h[k] == row)
        line[k] = '\\';
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string svg_mountain(const DyckPath& path) {
  constexpr int kUnit = 20;
  constexpr int kMargin = 10;
  const auto h = path.heights();
  const int top = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
  const int width = static_cast<int>(path.steps().size()) * kUnit + 2 * kMargin;
  const int height = top * kUnit + 2 * kMargin;
  auto px = [&](int x) { return std::to_string(kMargin + x * kUnit); };
  auto py = [&](int y) { return std::to_string(kMargin + (top - y) * kUnit); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\">\n";
  out += "  <line x1=\"" + px(0) + "\" y1=\"" + py(0) + "\" x2=\"" +
         px(static_cast<int>(path.steps().size())) + "\" y2=\"" + py(0) +
         "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  out += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
         "points=\"";
  for (std::size_t x = 0; x < h.size(); ++x) {
    if (x > 0) out += ' ';
    out += px(static_cast<int>(x)) + "," + py(h[x]);
  }
  out += "\"/>\n</svg>\n";
  return out;
}

}  // namespace ntl
