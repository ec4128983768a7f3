#include "ntl/dyck.hpp"

#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ntl/enumerate.hpp"

using namespace ntl;

TEST_CASE("path construction rejects malformed step sequences") {
  CHECK_NOTHROW(DyckPath({}));
  CHECK_NOTHROW(DyckPath({1, -1}));
  CHECK_THROWS_AS(DyckPath({-1, 1}), InputError);
  CHECK_THROWS_AS(DyckPath({1, 1}), InputError);
  CHECK_THROWS_AS(DyckPath({1, -1, -1, 1}), InputError);
  CHECK_THROWS_AS(DyckPath({2, -2}), InputError);
}

TEST_CASE("path text forms") {
  const DyckPath path = parse_dyck("UUDD");
  CHECK(path == parse_dyck("(())"));
  CHECK(path == parse_dyck("1100"));
  CHECK(path == parse_dyck(" U U D D "));
  CHECK(path == parse_dyck("U(D)"));
  CHECK(format_dyck(path) == "UUDD");
  CHECK_THROWS_AS(parse_dyck("UXDD"), ParseError);
  CHECK_THROWS_AS(parse_dyck("UDD"), InputError);
}

TEST_CASE("peaks lists every local maximum with its apex") {
  CHECK(peaks(parse_dyck("UUUUDDDD")) == std::vector<Hill>{{4, 4}});
  CHECK(peaks(parse_dyck("UDUDUDUD")) ==
        std::vector<Hill>{{1, 1}, {3, 1}, {5, 1}, {7, 1}});
  CHECK(peaks(parse_dyck("UUUDUDDD")) == std::vector<Hill>{{3, 3}, {5, 3}});
  CHECK(peaks(DyckPath({})).empty());
}

TEST_CASE("runs_to_dyck builds the hill envelope") {
  CHECK(runs_to_dyck(RunSequence::validate({{3, 3}}, 3)) ==
        parse_dyck("UUUUDDDD"));
  CHECK(runs_to_dyck(RunSequence::validate({}, 3)) == parse_dyck("UDUDUDUD"));
  CHECK(runs_to_dyck(RunSequence::validate({{2, 2}, {3, 2}}, 3)) ==
        parse_dyck("UUUDUDDD"));
}

TEST_CASE("dyck_to_runs reads nontrivial peaks") {
  CHECK(dyck_to_runs(parse_dyck("UUUUDDDD")) ==
        RunSequence::validate({{3, 3}}, 3));
  CHECK(dyck_to_runs(parse_dyck("UDUDUDUD")) == RunSequence::validate({}, 3));
  CHECK(dyck_to_runs(parse_dyck("UUUDUDDD")) ==
        RunSequence::validate({{2, 2}, {3, 2}}, 3));
}

TEST_CASE("peak statistic") {
  CHECK(peak_statistic(parse_dyck("UUUUDDDD")) == 3);
  CHECK(peak_statistic(parse_dyck("UDUDUDUD")) == 0);
  CHECK(peak_statistic(parse_dyck("UUUDUDDD")) == 4);
}

TEST_CASE("baseline touches") {
  CHECK(baseline_touches(parse_dyck("UDUDUDUD")) == std::vector<int>{2, 4, 6});
  CHECK(baseline_touches(parse_dyck("UUUUDDDD")).empty());
  CHECK(baseline_touches(parse_dyck("UUDDUUDD")) == std::vector<int>{4});
  // ... and the touched path indeed misses the generator 4/2 = 2.
  CHECK(runs_to_monomial(dyck_to_runs(parse_dyck("UUDDUUDD"))).word() ==
        parse_word("1 3", 3));
}

TEST_CASE("crossing counts on extended hills") {
  const RunSequence rs = RunSequence::validate({{2, 2}, {3, 2}}, 3);
  CHECK(multiplicity_via_geometry(rs, 2) == 2);
  CHECK(multiplicity_via_geometry(rs, 1) == 1);
  CHECK(multiplicity_via_geometry(rs, 3) == 1);
  const RunSequence empty = RunSequence::validate({}, 3);
  for (int k = 1; k <= 3; ++k) CHECK(multiplicity_via_geometry(empty, k) == 0);
  CHECK_THROWS_AS(multiplicity_via_geometry(rs, 0), InputError);
  CHECK_THROWS_AS(multiplicity_via_geometry(rs, 4), InputError);
}

TEST_CASE("the correspondence is a bijection at small semilength") {
  for (int rank = 0; rank <= 5; ++rank) {
    std::set<std::vector<int>> images;
    for (const RunSequence& rs : test_helpers::all_run_sequences(rank)) {
      const DyckPath path = runs_to_dyck(rs);
      CHECK(path.semilength() == rank + 1);
      CHECK(dyck_to_runs(path) == rs);
      CHECK(images.insert(path.steps()).second);
    }
    // Same cardinality as the full path set: the map is onto.
    CHECK(images.size() == all_dyck_paths(rank + 1).size());

    for (const DyckPath& path : all_dyck_paths(rank + 1))
      CHECK(runs_to_dyck(dyck_to_runs(path)) == path);
  }
}

TEST_CASE("peak constraints transport to hill coordinates") {
  for (const DyckPath& path : all_dyck_paths(6)) {
    std::vector<Hill> nontrivial;
    for (const Hill& hill : peaks(path))
      if (hill.apex_y >= 2) nontrivial.push_back(hill);
    const RunSequence runs = dyck_to_runs(path);
    const auto& pairs = runs.pairs();
    REQUIRE(pairs.size() == nontrivial.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [a, b] = nontrivial[i];
      CHECK((a + b) % 2 == 0);
      CHECK((b <= a) == (pairs[i].length <= pairs[i].peak));
      if (i > 0) {
        const auto [pa, pb] = nontrivial[i - 1];
        CHECK((pa + pb < a + b) == (pairs[i - 1].peak < pairs[i].peak));
        CHECK((pa - pb < a - b) ==
              (pairs[i - 1].valley() < pairs[i].valley()));
      }
    }
  }
}

TEST_CASE("ascii rendering") {
  CHECK(ascii_mountain(parse_dyck("UUDD")) == " /\\ \n/  \\\n");
  CHECK(ascii_mountain(parse_dyck("UDUD")) == "/\\/\\\n");
  CHECK(ascii_mountain(DyckPath({})).empty());
}

TEST_CASE("svg rendering") {
  const std::string svg = svg_mountain(parse_dyck("UUDDUD"));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}
