#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mapcount/oracle.hpp"

using namespace mapcount;
using namespace mapcount::oracle;

namespace {

OracleQuery constellations(int m, int n) {
  OracleQuery q;
  q.m = m;
  q.n = n;
  return q;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("permutation helpers") {
  const auto p = from_cycles(4, {{0, 1, 2}});
  CHECK(p == Permutation{1, 2, 0, 3});
  CHECK(cycle_count(p) == 2);
  CHECK(cycle_count(Permutation{0, 1, 2}) == 3);
  CHECK_THROWS_AS(from_cycles(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(from_cycles(3, {{0, 3}}), std::invalid_argument);

  const std::vector<Permutation> joined{from_cycles(4, {{0, 1}}), from_cycles(4, {{1, 2, 3}})};
  CHECK(is_transitive(joined, 4));
  const std::vector<Permutation> split{from_cycles(4, {{0, 1}}), from_cycles(4, {{2, 3}})};
  CHECK_FALSE(is_transitive(split, 4));
  CHECK(is_transitive(std::vector<Permutation>{}, 1));
}

TEST_CASE("bipartite oracle examples") {
  OracleQuery q = constellations(2, 2);
  q.model = Model::bipartite_profile;
  q.filter = FaceFilter::type(parse_profile("1:2"));
  q.genus = 0;
  CHECK(run(q).rooted(0) == 1);

  q.filter = FaceFilter::type(parse_profile("2:1"));
  CHECK(run(q).rooted(0) == 2);

  q.filter = FaceFilter::type(parse_profile("1:1"));
  CHECK_THROWS_AS(run(q), std::invalid_argument);  // profile edges must equal n
}

TEST_CASE("constellation oracle examples") {
  const auto r = run(constellations(3, 2));
  CHECK(r.rooted(0) == 6);
  CHECK(r.rooted(1) == 1);

  OracleQuery q = constellations(3, 2);
  q.model = Model::one_faced;
  const auto u = run(q);
  CHECK(u.rooted(0) == 3);
  CHECK(u.rooted(1) == 1);
}

TEST_CASE("frozen oracle table for m = 2, n = 4") {
  const auto r = run(constellations(2, 4));
  std::map<std::pair<std::int64_t, std::string>, std::string> got;
  for (const auto& [key, tally] : r.table) got[key] = tally.rooted.str();
  const std::map<std::pair<std::int64_t, std::string>, std::string> want{
      {{0, "1:4"}, "1"},  {{0, "1:2,2:1"}, "12"}, {{0, "1:1,3:1"}, "20"}, {{0, "2:2"}, "9"},
      {{0, "4:1"}, "14"}, {{1, "1:1,3:1"}, "4"},  {{1, "2:2"}, "1"},      {{1, "4:1"}, "10"}};
  CHECK(got == want);
}

TEST_CASE("frozen constellation totals by genus") {
  auto totals = [](int m, int n) {
    std::map<std::int64_t, std::string> out;
    for (const auto& [g, v] : run(constellations(m, n)).rooted_by_genus()) out[g] = v.str();
    return out;
  };
  CHECK(totals(3, 3) == std::map<std::int64_t, std::string>{{0, "54"}, {1, "40"}, {2, "3"}});
  CHECK(totals(3, 4) == std::map<std::int64_t, std::string>{{0, "594"}, {1, "1099"}, {2, "430"}, {3, "20"}});
  CHECK(totals(4, 3) == std::map<std::int64_t, std::string>{{0, "160"}, {1, "325"}, {2, "135"}, {3, "5"}});
}

TEST_CASE("work counter equals the number of tuples examined") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}, {4, 2}}) {
    const auto r = run(constellations(m, n));
    std::uint64_t expected = 1;
    for (int i = 0; i < m; ++i) expected *= static_cast<std::uint64_t>(factorial(n));
    CHECK(r.work == expected);
  }
}

TEST_CASE("conjugacy-class reduction matches the unreduced run") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}}) {
    auto q = constellations(m, n);
    const auto full = run(q);
    q.reduce_first = true;
    const auto reduced = run(q);
    CHECK(reduced.table.size() == full.table.size());
    for (const auto& [key, t] : full.table) {
      REQUIRE(reduced.table.count(key) == 1);
      CHECK(reduced.table.at(key).labeled == t.labeled);
      CHECK(reduced.table.at(key).rooted == t.rooted);
    }
    CHECK(reduced.work < full.work);
  }
}

TEST_CASE("thread count does not change the result") {
  auto q = constellations(3, 4);
  const auto one = run(q);
  q.threads = 4;
  const auto four = run(q);
  CHECK(one.work == four.work);
  REQUIRE(one.table.size() == four.table.size());
  for (const auto& [key, t] : one.table) CHECK(four.table.at(key).labeled == t.labeled);

  const auto m1 = enumerate_monotone(4, 1, 1);
  const auto m4 = enumerate_monotone(4, 1, 4);
  CHECK(m1.rooted(1) == m4.rooted(1));
  CHECK(m1.work == m4.work);
}

TEST_CASE("work cap is enforced before enumeration") {
  CHECK_THROWS_AS(run(constellations(3, 7)), WorkCapExceeded);
  auto q = constellations(2, 3);
  q.work_cap = 10;
  CHECK_THROWS_AS(run(q), WorkCapExceeded);
  q.work_cap = 36;
  CHECK_NOTHROW(run(q));
}

TEST_CASE("Euler parity holds across small enumerations") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= (m == 2 ? 5 : 3); ++n) {
      const auto r = run(constellations(m, n));
      for (const auto& [key, t] : r.table) {
        CHECK(key.first >= 0);
        CHECK(t.rooted.is_integer());
        CHECK(t.labeled.sign() > 0);
      }
    }
}

TEST_CASE("monotone oracle") {
  CHECK(enumerate_monotone(1, 0).rooted(0) == 1);
  CHECK(enumerate_monotone(1, 1).table.empty());
  const auto two = enumerate_monotone(2, 0);
  CHECK(two.table.begin()->second.labeled == 1);
  CHECK(two.rooted(0) == ExactRational(ExactInt(1), ExactInt(2)));
  CHECK(enumerate_monotone(2, 1).rooted(1).str() == "1/2");
  CHECK(enumerate_monotone(3, 0).rooted(0).str() == "4/3");
  CHECK(enumerate_monotone(3, 1).rooted(1).str() == "20/3");
  CHECK(enumerate_monotone(4, 0).rooted(0).str() == "6");
  CHECK(enumerate_monotone(4, 1).rooted(1).str() == "81");
  CHECK(enumerate_monotone(5, 0).rooted(0).str() == "176/5");
  CHECK_THROWS_AS(enumerate_monotone(10, 0), WorkCapExceeded);
  OracleQuery q;
  q.model = Model::monotone;
  q.n = 3;
  CHECK_THROWS_AS(run(q), std::invalid_argument);  // genus is required
}
