#pragma once

#include <utility>
#include <vector>

#include "ntl/runs.hpp"

namespace test_helpers {

/// All valid run sequences of the given rank, generated directly from the
/// three structural constraints. Test-only; independent of enumerate_basis.
inline std::vector<ntl::RunSequence> all_run_sequences(int rank) {
  std::vector<ntl::RunSequence> out;
  std::vector<std::pair<int, int>> pairs;
  auto dfs = [&](auto&& self, int last_peak, int last_valley) -> void {
    out.push_back(ntl::RunSequence::validate(pairs, rank));
    for (int peak = last_peak + 1; peak <= rank; ++peak)
      for (int length = 1; length <= peak; ++length) {
        const int valley = peak - length + 1;
        if (valley <= last_valley) continue;
        pairs.emplace_back(peak, length);
        self(self, peak, valley);
        pairs.pop_back();
      }
  };
  dfs(dfs, 0, 0);
  return out;
}

/// Calls fn on every word over {1..rank} of every length in [0, max_len].
template <typename Fn>
void for_each_word(int rank, int max_len, Fn&& fn) {
  for (int len = 0; len <= max_len; ++len) {
    if (rank == 0 && len > 0) return;
    std::vector<int> letters(static_cast<std::size_t>(len), 1);
    for (;;) {
      fn(ntl::Word(letters, rank));
      if (len == 0) break;
      int k = len - 1;
      while (k >= 0 && letters[static_cast<std::size_t>(k)] == rank) {
        letters[static_cast<std::size_t>(k)] = 1;
        --k;
      }
      if (k < 0) break;
      ++letters[static_cast<std::size_t>(k)];
    }
  }
}

}  // namespace test_helpers
