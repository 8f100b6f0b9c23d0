#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mapcount/profiles.hpp"

using namespace mapcount;

TEST_CASE("parse_profile reads half-degree:multiplicity entries") {
  auto a = parse_profile("1:2");
  CHECK(a.edges() == 2);
  CHECK(a.faces() == 2);
  CHECK(a.multiplicity(1) == 2);
  CHECK(a.multiplicity(2) == 0);

  auto b = parse_profile("2:2");
  CHECK(b.edges() == 4);
  CHECK(b.faces() == 2);

  CHECK(parse_profile("3:1,1:2").str() == "1:2,3:1");
  CHECK(parse_profile("1000000:1").edges() == 1000000);
}

TEST_CASE("parse_profile rejects malformed input with a position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_profile(text);
    } catch (const ProfileParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for '" << text << "'");
    return 0;
  };
  CHECK(position_of("1:1,1:1") == 4);  // duplicate index
  CHECK(position_of("1:0") == 2);      // zero multiplicity
  CHECK(position_of("0:1") == 0);
  CHECK(position_of("") == 0);
  CHECK(position_of("1:2,") == 4);
  CHECK(position_of("1;2") == 1);
  CHECK(position_of("x") == 0);
  CHECK(position_of("1:2 ") == 3);
  CHECK(position_of("1000001:1") == 0);
  CHECK(position_of("2:400000,1:300000") == 9);
  CHECK_THROWS_WITH_AS(parse_profile("1:1,1:1"), doctest::Contains("duplicate"), ProfileParseError);
}

TEST_CASE("render then parse is the identity on canonical profiles") {
  for (std::int64_t n = 1; n <= 9; ++n)
    for (const auto& p : profiles_with_edges(n)) REQUIRE(parse_profile(p.str()) == p);
}

TEST_CASE("profiles_with_edges enumerates partitions") {
  const std::vector<std::size_t> partition_numbers{1, 2, 3, 5, 7, 11, 15, 22};
  for (std::size_t n = 1; n <= partition_numbers.size(); ++n) {
    auto ps = profiles_with_edges(static_cast<std::int64_t>(n));
    CHECK(ps.size() == partition_numbers[n - 1]);
    for (const auto& p : ps) CHECK(p.edges() == static_cast<std::int64_t>(n));
  }
  CHECK(profiles_with_edges(0).empty());
}

TEST_CASE("subprofiles examples") {
  std::vector<std::pair<std::string, std::string>> got;
  for (const auto& [s, t] : subprofiles(parse_profile("1:2"))) got.emplace_back(s.str(), t.str());
  const std::vector<std::pair<std::string, std::string>> want{{"", "1:2"}, {"1:1", "1:1"}, {"1:2", ""}};
  CHECK(got == want);

  int empty_pairs = 0;
  for (const auto& [s, t] : subprofiles(DegreeProfile{})) {
    CHECK(s.empty());
    CHECK(t.empty());
    ++empty_pairs;
  }
  CHECK(empty_pairs == 1);

  int n = 0;
  for (const auto& pr : subprofiles(parse_profile("1:1,2:1"))) {
    (void)pr;
    ++n;
  }
  CHECK(n == 4);
}

TEST_CASE("subprofile stream is exhaustive, duplicate-free and sums to f") {
  // Every profile with up to 4 entries drawn from half-degrees 1..4, multiplicities <= 3.
  int checked = 0;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> degrees;
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) degrees.push_back(i + 1);
    std::vector<int> mult(degrees.size(), 1);
    while (true) {
      std::vector<DegreeProfile::Entry> e;
      std::int64_t expected = 1;
      for (std::size_t j = 0; j < degrees.size(); ++j) {
        e.push_back({degrees[j], mult[j]});
        expected *= mult[j] + 1;
      }
      const DegreeProfile f(e);
      std::set<std::string> seen;
      std::string prev;
      std::int64_t count = 0;
      for (const auto& [s, t] : subprofiles(f)) {
        ++count;
        for (const auto& entry : f.entries())
          REQUIRE(s.multiplicity(entry.half_degree) + t.multiplicity(entry.half_degree) == entry.multiplicity);
        REQUIRE(s.edges() + t.edges() == f.edges());
        REQUIRE(seen.insert(s.str()).second);
      }
      REQUIRE(count == expected);
      REQUIRE(subprofiles(f).size() == expected);
      ++checked;
      std::size_t j = 0;
      while (j < mult.size() && ++mult[j] > 3) mult[j++] = 1;
      if (j == mult.size()) break;
    }
  }
  CHECK(checked == 4 * 3 + 6 * 9 + 4 * 27 + 81);
}

TEST_CASE("subprofiles come in lexicographic order of the s-vector") {
  std::vector<std::vector<std::int64_t>> order;
  const auto f = parse_profile("1:2,3:1");
  for (const auto& [s, t] : subprofiles(f)) order.push_back({s.multiplicity(1), s.multiplicity(3)});
  CHECK(std::is_sorted(order.begin(), order.end()));
  CHECK(order.size() == 6);
}

TEST_CASE("euler bookkeeping") {
  CHECK(euler(0, parse_profile("2:2")).vertices == 4);
  CHECK(euler(1, parse_profile("4:1")).vertices == 3);
  const auto d = euler(1, parse_profile("2:1"));
  CHECK(d.vertices == 1);
  CHECK(d.edges == 2);
  CHECK(d.faces == 1);
  CHECK(euler(5, parse_profile("1:1")).vertices == -8);
}

TEST_CASE("profile construction merges and validates") {
  DegreeProfile p({{2, 1}, {1, 3}, {2, 2}, {5, 0}});
  CHECK(p.str() == "1:3,2:3");
  CHECK_THROWS_AS(DegreeProfile({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeProfile({{1, -1}}), std::invalid_argument);
  CHECK(DegreeProfile::from_cycle_lengths({3, 1, 1}).str() == "1:2,3:1");
}
