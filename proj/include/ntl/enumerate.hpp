#pragma once

#include <cstdint>
#include <vector>

#include "ntl/algebra.hpp"
#include "ntl/dyck.hpp"

namespace ntl {

/// counts[d] = number of basis monomials of P_rank with degree d.
struct DegreeDistribution {
  int rank = 0;
  std::vector<std::uint64_t> counts;

  friend bool operator==(const DegreeDistribution&,
                         const DegreeDistribution&) = default;
};

/// All basis monomials of the algebra of P_n, sorted lexicographically by
/// word. Generated by depth-first search over valid run sequences (peaks
/// strictly increasing, valleys strictly increasing, lengths within peaks),
/// not by word-space search. Includes the unit. Throws InputError for n < 0.
std::vector<NtlMonomial> enumerate_basis(int n);

/// Number of basis monomials of P_n (counts enumerate_basis). Equals the
/// (n+1)-st Catalan number; that identity is checked by tests, not assumed.
std::uint64_t dimension(int n);

/// C_m = binomial(2m, m) / (m + 1), by the exact product recurrence
/// C_{k+1} = C_k * 2(2k+1) / (k+2). Independent of any enumeration.
std::uint64_t catalan_number(int m);

/// Histogram of enumerate_basis(n) by degree.
DegreeDistribution degree_distribution(int n);

/// All Dyck paths of the given semilength, by direct recursive generation of
/// up/down sequences (independent of the run-sequence machinery).
std::vector<DyckPath> all_dyck_paths(int semilength);

/// Histogram of peak_statistic over all Dyck paths of semilength n+1,
/// enumerated by all_dyck_paths. Equals degree_distribution(n); the two
/// sides are computed by independent code paths so tests can compare them.
DegreeDistribution dyck_statistic_distribution(int n);

}  // namespace ntl
