#include "ntl/enumerate.hpp"

#include <algorithm>
#include <utility>

#include "ntl/runs.hpp"

namespace ntl {

std::vector<NtlMonomial> enumerate_basis(int n) {
  if (n < 0) throw InputError("rank must be nonnegative");
  std::vector<NtlMonomial> basis;
  std::vector<std::pair<int, int>> pairs;

  auto dfs = [&](auto&& self, int last_peak, int last_valley) -> void {
    basis.push_back(runs_to_monomial(RunSequence::validate(pairs, n)));
    for (int peak = last_peak + 1; peak <= n; ++peak) {
      for (int length = 1; length <= peak; ++length) {
        const int valley = peak - length + 1;
        if (valley <= last_valley) continue;
        pairs.emplace_back(peak, length);
        self(self, peak, valley);
        pairs.pop_back();
      }
    }
  };
  dfs(dfs, 0, 0);

  std::sort(basis.begin(), basis.end(),
            [](const NtlMonomial& a, const NtlMonomial& b) {
              return lex_less(a.word(), b.word());
            });
  return basis;
}

std::uint64_t dimension(int n) { return enumerate_basis(n).size(); }

std::uint64_t catalan_number(int m) {
  if (m < 0) throw InputError("Catalan index must be nonnegative");
  if (m > 33)
    throw InputError("Catalan numbers beyond C_33 overflow 64-bit arithmetic");
  std::uint64_t c = 1;
  for (int k = 0; k < m; ++k)
    c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) /
        (static_cast<std::uint64_t>(k) + 2);
  return c;
}

DegreeDistribution degree_distribution(int n) {
  DegreeDistribution distribution{n, {}};
  for (const NtlMonomial& m : enumerate_basis(n)) {
    const auto degree = static_cast<std::size_t>(m.degree());
    if (distribution.counts.size() <= degree)
      distribution.counts.resize(degree + 1, 0);
    ++distribution.counts[degree];
  }
  return distribution;
}

std::vector<DyckPath> all_dyck_paths(int semilength) {
  if (semilength < 0) throw InputError("semilength must be nonnegative");
  std::vector<DyckPath> paths;
  std::vector<int> steps;
  steps.reserve(static_cast<std::size_t>(2 * semilength));

  auto dfs = [&](auto&& self, int ups, int downs) -> void {
    if (ups == semilength && downs == semilength) {
      paths.emplace_back(steps);
      return;
    }
    if (ups < semilength) {
      steps.push_back(1);
      self(self, ups + 1, downs);
      steps.pop_back();
    }
    if (downs < ups) {
      steps.push_back(-1);
      self(self, ups, downs + 1);
      steps.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return paths;
}

DegreeDistribution dyck_statistic_distribution(int n) {
  if (n < 0) throw InputError("rank must be nonnegative");
  DegreeDistribution distribution{n, {}};
  for (const DyckPath& path : all_dyck_paths(n + 1)) {
    const auto statistic = static_cast<std::size_t>(peak_statistic(path));
    if (distribution.counts.size() <= statistic)
      distribution.counts.resize(statistic + 1, 0);
    ++distribution.counts[statistic];
  }
  return distribution;
}

}  // namespace ntl
