#include "ntl/verify.hpp"

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "ntl/enumerate.hpp"
#include "ntl/oracle.hpp"
#include "ntl/perm.hpp"
#include "ntl/runs.hpp"

namespace ntl {

namespace {

constexpr int kOracleRankCap = 5;
constexpr int kOracleLengthCap = 10;
constexpr int kTriangleRankCap = 7;

struct Reporter {
  std::ostream& out;
  std::ostream& err;

  bool pass(const std::string& name) {
    out << "ok: " << name << "\n";
    return true;
  }
  bool fail(const std::string& name, const std::string& detail) {
    err << "FAIL: " << name << ": " << detail << "\n";
    return false;
  }
};

std::string describe(const NtlMonomial& m) {
  return "monomial \"" + format_monomial(m) + "\"";
}

bool check_basis_integrity(const std::vector<NtlMonomial>& basis,
                           Reporter& report) {
  const std::string name = "basis words are nonzero, canonical, and run-decomposable";
  for (const NtlMonomial& m : basis) {
    if (is_zero(m.word()))
      return report.fail(name, describe(m) + " tests zero");
    const auto canonical = canonical_form(m.word());
    if (!canonical || !(*canonical == m))
      return report.fail(name, describe(m) + " is not its own canonical form");
    const RunSequence runs = monomial_to_runs(m);
    if (!(runs_to_monomial(runs) == m))
      return report.fail(name, describe(m) + " fails the run round trip");
  }
  return report.pass(name);
}

bool check_dyck_roundtrips(int n, const std::vector<NtlMonomial>& basis,
                           Reporter& report) {
  const std::string name = "Dyck bijection round trips are identities";
  for (const NtlMonomial& m : basis) {
    const RunSequence runs = monomial_to_runs(m);
    const DyckPath path = runs_to_dyck(runs);
    if (!(dyck_to_runs(path) == runs))
      return report.fail(name, describe(m) + " fails runs -> path -> runs");
  }
  for (const DyckPath& path : all_dyck_paths(n + 1)) {
    if (!(runs_to_dyck(dyck_to_runs(path)) == path))
      return report.fail(name, "path " + format_dyck(path) +
                                   " fails path -> runs -> path");
  }
  return report.pass(name);
}

bool check_statistic(int n, const std::vector<NtlMonomial>& basis,
                     Reporter& report) {
  const std::string name = "degree equals the Dyck peak statistic";
  for (const NtlMonomial& m : basis) {
    const DyckPath path = runs_to_dyck(monomial_to_runs(m));
    if (peak_statistic(path) != m.degree())
      return report.fail(name, describe(m) + " maps to statistic " +
                                   std::to_string(peak_statistic(path)));
  }
  if (!(dyck_statistic_distribution(n) == degree_distribution(n)))
    return report.fail(name, "statistic distribution differs from the degree "
                             "distribution");
  return report.pass(name);
}

bool check_permutations(int n, const std::vector<NtlMonomial>& basis,
                        Reporter& report) {
  const std::string name = "permutation correspondence";
  std::set<std::vector<int>> images;
  for (const NtlMonomial& m : basis) {
    const Permutation p = monomial_to_permutation(m);
    if (!images.insert(p.images()).second)
      return report.fail(name, describe(m) + " collides with another image");
    if (!is_321_avoiding(p))
      return report.fail(name, describe(m) + " maps to a non-avoiding "
                                             "permutation");
    if (inversions(p) != m.degree())
      return report.fail(name, describe(m) + " maps to inversion count " +
                                   std::to_string(inversions(p)));
    if (!(permutation_to_monomial(p) == m))
      return report.fail(name, describe(m) + " fails the permutation round "
                                             "trip");
  }
  if (n <= kTriangleRankCap) {
    if (!(degree_distribution(n) == oracle::oracle_321_triangle(n)))
      return report.fail(name, "degree triangle differs from the "
                               "321-avoiding inversion triangle");
  } else {
    report.out << "note: inversion-triangle cross-check skipped (factorial "
                  "enumeration is capped at rank "
               << kTriangleRankCap << ")\n";
  }
  return report.pass(name);
}

bool check_multiplicities(int n, const std::vector<NtlMonomial>& basis,
                          Reporter& report) {
  const std::string name =
      "multiplicity bounds, baseline touches, and hill-crossing counts";
  for (const NtlMonomial& m : basis) {
    std::map<int, int> multiplicity;
    for (int letter : m.word().letters()) ++multiplicity[letter];

    // An index that is the j-th smallest present index occurs at most j
    // times, and symmetrically from the largest.
    const int distinct = static_cast<int>(multiplicity.size());
    int position = 0;
    for (const auto& [letter, count] : multiplicity) {
      ++position;
      if (count > position || count > distinct - position + 1)
        return report.fail(name, describe(m) + ": letter " +
                                     std::to_string(letter) +
                                     " breaks the multiplicity bound");
    }

    const RunSequence runs = monomial_to_runs(m);
    const DyckPath path = runs_to_dyck(runs);
    for (int x : baseline_touches(path)) {
      if (x % 2 != 0)
        return report.fail(name, "odd baseline touch on " + format_dyck(path));
      if (multiplicity.count(x / 2))
        return report.fail(name, describe(m) + " contains letter " +
                                     std::to_string(x / 2) +
                                     " despite a baseline touch at x=" +
                                     std::to_string(x));
    }

    for (int k = 1; k <= n; ++k) {
      const auto it = multiplicity.find(k);
      const int direct = it == multiplicity.end() ? 0 : it->second;
      if (multiplicity_via_geometry(runs, k) != direct)
        return report.fail(name, describe(m) + ": geometric count differs "
                                               "for letter " +
                                     std::to_string(k));
    }
  }
  return report.pass(name);
}

bool check_oracle(int n, Reporter& report) {
  const std::string name = "agreement with the brute-force word search";
  if (n > kOracleRankCap) {
    report.out << "note: oracle checks skipped (word-space search is capped "
                  "at rank "
               << kOracleRankCap << ")\n";
    return true;
  }
  for (int length = 0; length <= kOracleLengthCap; ++length) {
    if (n == 0 && length > 0) break;
    std::vector<int> letters(static_cast<std::size_t>(length), 1);
    for (;;) {
      const Word w(letters, n);
      if (is_zero(w) != oracle::oracle_is_zero(w))
        return report.fail(name, "zero tests disagree on \"" +
                                     format_word(w) + "\"");
      if (length == 0) break;
      int k = length - 1;
      while (k >= 0 && letters[static_cast<std::size_t>(k)] == n) {
        letters[static_cast<std::size_t>(k)] = 1;
        --k;
      }
      if (k < 0) break;
      ++letters[static_cast<std::size_t>(k)];
    }
  }

  std::vector<Word> expected;
  for (const NtlMonomial& m : enumerate_basis(n)) expected.push_back(m.word());
  if (oracle::oracle_basis(n) != expected)
    return report.fail(name, "word-space basis differs from the run-sequence "
                             "enumeration");
  return report.pass(name);
}

}  // namespace

bool verify_claims(int n, const VerifyOptions& options, std::ostream& out,
                   std::ostream& err) {
  if (n < 0) throw InputError("rank must be nonnegative");
  Reporter report{out, err};

  if (dimension(n) != catalan_number(n + 1))
    return report.fail("dimension equals Catalan(n+1)",
                       "dimension(" + std::to_string(n) + ") = " +
                           std::to_string(dimension(n)));
  report.pass("dimension equals Catalan(n+1)");

  const std::vector<NtlMonomial> basis = enumerate_basis(n);
  if (!check_basis_integrity(basis, report)) return false;
  if (!check_dyck_roundtrips(n, basis, report)) return false;
  if (!check_statistic(n, basis, report)) return false;
  if (!check_permutations(n, basis, report)) return false;
  if (!check_multiplicities(n, basis, report)) return false;
  if (options.with_oracle && !check_oracle(n, report)) return false;
  return true;
}

}  // namespace ntl
