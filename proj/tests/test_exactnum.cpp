#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mapcount/exactnum.hpp"

using namespace mapcount;

TEST_CASE("binomial values and vanishing conventions") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(-1, 2) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30).str() == "118264581564861424");
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK_THROWS_AS(catalan(-1), std::domain_error);
}

TEST_CASE("Pascal identity for a <= 60") {
  for (std::int64_t a = 1; a <= 60; ++a)
    for (std::int64_t b = 0; b <= a; ++b) REQUIRE(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("catalan(n) * (n + 1) == binomial(2n, n) for n <= 200") {
  for (std::int64_t n = 0; n <= 200; ++n) REQUIRE(catalan(n) * ExactInt(n + 1) == binomial(2 * n, n));
}

TEST_CASE("binomial table agrees with direct binomials") {
  BinomialTable t(6);
  t.reserve(40);
  for (std::int64_t a = -2; a <= 40; ++a)
    for (std::int64_t b = -1; b <= 6; ++b) REQUIRE(t(a, b) == binomial(a, b));
  CHECK_THROWS_AS(t(41, 2), std::out_of_range);
  CHECK(t.get(50, 9) == binomial(50, 9));
}

TEST_CASE("exact integer arithmetic and rendering round-trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::string digits = (rng() & 1) ? "-" : "";
    const int len = 1 + static_cast<int>(rng() % 60);
    digits += static_cast<char>('1' + rng() % 9);
    for (int j = 1; j < len; ++j) digits += static_cast<char>('0' + rng() % 10);
    const auto a = ExactInt::parse(digits);
    REQUIRE(a.str() == digits);
    REQUIRE(ExactInt::parse(a.str()) == a);
    const auto b = ExactInt::parse(std::to_string(static_cast<std::int64_t>(rng() >> 2)));
    REQUIRE(a + b - b == a);
  }
  CHECK_THROWS_AS(ExactInt::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ExactInt::parse("-"), std::invalid_argument);
  CHECK_THROWS_AS(ExactInt::parse("12a"), std::invalid_argument);
}

TEST_CASE("exact division") {
  CHECK(*ExactInt(10).divide_exact(ExactInt(5)) == 2);
  CHECK_FALSE(ExactInt(10).divide_exact(ExactInt(3)).has_value());
  CHECK_FALSE(ExactInt(10).divide_exact(ExactInt(0)).has_value());
  ExactInt acc(1);
  acc.add_product(ExactInt(3), ExactInt(4));
  CHECK(acc == 13);
  acc.scale(-2);
  CHECK(acc == -26);
}

TEST_CASE("rationals are kept in lowest terms") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto p = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
    auto q = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
    if (q == 0) q = 1;
    const ExactRational r{ExactInt(p), ExactInt(q)};
    REQUIRE(r.denominator().sign() > 0);
    mpz_class g;
    mpz_class num = r.numerator().mpz();
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), r.denominator().mpz().get_mpz_t());
    REQUIRE(g == 1);
    REQUIRE(ExactRational::parse(r.str()) == r);
  }
  CHECK(ExactRational(ExactInt(2), ExactInt(4)).str() == "1/2");
  CHECK(ExactRational(ExactInt(3), ExactInt(-6)).str() == "-1/2");
  CHECK(ExactRational(ExactInt(4), ExactInt(2)).str() == "2");
  CHECK(ExactRational::parse("-3/6").str() == "-1/2");
  CHECK_THROWS_AS(ExactRational(ExactInt(1), ExactInt(0)), std::domain_error);
  CHECK_THROWS_AS(ExactRational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(ExactRational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(ExactRational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), std::domain_error);
}
