#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "jacring/admissible.hpp"
#include "jacring/multi_index.hpp"
#include "jacring/rational.hpp"

using namespace jacring;

TEST_CASE("factorial uses the k! = 1 convention for k <= 0") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(-3) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("generalized binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-7, 0) == 1);  // h = 0 gives 1 for any n
  CHECK(binomial(-1, 2) == 1);  // (-1)(-2)/2!
  CHECK(binomial(3, -1) == 0);  // negative h gives 0
  CHECK(binomial(7, 2) == 21);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(4, 6) == 0);  // h > n >= 0
  CHECK(binomial(0, 0) == 1);
  // denominator of the reduced fraction is always 1
  for (long n = -15; n <= 15; ++n)
    for (long h = 0; h <= 10; ++h)
      CHECK(binomial(n, h).get_den() == 1);
}

TEST_CASE("Pascal identity over a signed grid") {
  for (long n = -20; n <= 20; ++n)
    for (long h = 1; h <= 20; ++h)
      CHECK(binomial(n, h) == binomial(n - 1, h) + binomial(n - 1, h - 1));
}

TEST_CASE("binomial matches the combinatorial count for n >= 0") {
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(6, 3) == 20);
  for (long h = 7; h <= 12; ++h) CHECK(binomial(6, h) == 0);
}

TEST_CASE("ipow") {
  CHECK(ipow(0, 0) == 1);
  CHECK(ipow(2, 10) == 1024);
  CHECK(ipow(-3, 3) == -27);
  CHECK(ipow(5, 1) == 5);
  CHECK(ipow(7, 0) == 1);
}

TEST_CASE("rational text form is canonical and round-trips") {
  CHECK(rational_str(Rational(3, 4)) == "3/4");
  CHECK(rational_str(Rational(-5)) == "-5");
  CHECK(rational_str(Rational(6, 4)) == "3/2");  // canonicalized on output
  CHECK(rational_str(Rational(0)) == "0");
  CHECK(rational_str(Rational(4, -6)) == "-2/3");  // denominator made positive
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-33/2") == Rational(-33, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("6/4") == Rational(3, 2));  // canonicalized on input
  for (const Rational& q :
       {Rational(0), Rational(-10, 3), Rational(70), Rational(1, 999)})
    CHECK(parse_rational(rational_str(q)) == q);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("multi-index canonicalization is order-insensitive and idempotent") {
  const MultiIndex a{1, 2, 1};
  const MultiIndex b{2, 1, 1};
  const MultiIndex c{1, 1, 2};
  CHECK(a == b);
  CHECK(b == c);
  CHECK(a.entries() == std::vector<int>{2, 1, 1});
  CHECK(MultiIndex(a.entries()) == a);  // idempotent

  std::vector<int> entries{3, 1, 2, 2};
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(entries.begin(), entries.end(), rng);
    CHECK(MultiIndex(entries) == MultiIndex({3, 2, 2, 1}));
  }
  CHECK_THROWS_AS(MultiIndex({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({-2}), std::invalid_argument);
}

TEST_CASE("degree statistics d and s") {
  CHECK(MultiIndex{}.d() == 0);
  CHECK(MultiIndex{}.s() == 0);
  CHECK(MultiIndex{2, 1}.d() == 2);
  CHECK(MultiIndex{2, 1}.s() == 3);
  CHECK(MultiIndex{3, 1}.d() == 2);
  CHECK(MultiIndex{3, 1}.s() == 4);
}

TEST_CASE("united and sub_multisets") {
  CHECK(MultiIndex{2, 1}.united(MultiIndex{1}) == MultiIndex({2, 1, 1}));
  CHECK(MultiIndex{}.united(MultiIndex{3}) == MultiIndex({3}));
  const std::set<MultiIndex> subs = MultiIndex{2, 1, 1}.sub_multisets();
  const std::set<MultiIndex> expected{MultiIndex{},     MultiIndex{1},
                                      MultiIndex{2},    MultiIndex{1, 1},
                                      MultiIndex{2, 1}, MultiIndex{2, 1, 1}};
  CHECK(subs == expected);
  CHECK(MultiIndex{}.sub_multisets() == std::set<MultiIndex>{MultiIndex{}});
}

TEST_CASE("display form") {
  CHECK(MultiIndex{}.str() == "{}");
  CHECK(MultiIndex{2, 1}.str() == "{2,1}");
  CHECK(MultiIndex{1, 1, 1}.str() == "{1,1,1}");
}

TEST_CASE("admissible_top = g - s - 2d") {
  CHECK(admissible_top(7, MultiIndex{1, 1}) == 1);
  CHECK(admissible_top(8, MultiIndex{3, 1}) == 0);
  CHECK(admissible_top(5, MultiIndex{1, 1}) == -1);  // empty column
  CHECK(admissible_top(6, MultiIndex{}) == 6);
}

TEST_CASE("check_admissible accepts a valid picture-4 set") {
  AdmissibleSet a;
  a.genus = 6;
  a.indexes = {MultiIndex{}, MultiIndex{1}, MultiIndex{2}, MultiIndex{1, 1}};
  CHECK(check_admissible(a).empty());
}

TEST_CASE("check_admissible lists every violation") {
  AdmissibleSet a;
  a.genus = 5;
  a.indexes = {MultiIndex{}, MultiIndex{1, 1}};
  const auto violations = check_admissible(a);
  // {1,1} misses its sub-multiset {1} and violates s + 2d = 6 > 5.
  CHECK(violations.size() >= 2);

  AdmissibleSet b;
  b.genus = 8;
  b.indexes = {MultiIndex{}, MultiIndex{1}, MultiIndex{2}, MultiIndex{3},
               MultiIndex{4}};
  // {4} violates the singleton cap s <= floor((g-1)/2) = 3.
  CHECK(!check_admissible(b).empty());

  AdmissibleSet c;
  c.genus = 6;
  c.indexes = {MultiIndex{1}};  // missing the empty index
  CHECK(!check_admissible(c).empty());

  AdmissibleSet d;
  d.genus = 7;
  d.indexes = {MultiIndex{}, MultiIndex{1}, MultiIndex{3}};  // gap at {2}
  CHECK(!check_admissible(d).empty());
}

TEST_CASE("gonality bound on singletons") {
  AdmissibleSet a;
  a.genus = 9;
  a.gonality = 3;  // trigonal: only {1} allowed
  a.indexes = {MultiIndex{}, MultiIndex{1}, MultiIndex{2}};
  CHECK(!check_admissible(a).empty());
  a.indexes = {MultiIndex{}, MultiIndex{1}, MultiIndex{1, 1}};
  CHECK(check_admissible(a).empty());
}

TEST_CASE("make_admissible closes downward and over singleton segments") {
  const AdmissibleSet a =
      make_admissible(8, {MultiIndex{3, 1}, MultiIndex{2, 1}});
  CHECK(a.contains(MultiIndex{}));
  CHECK(a.contains(MultiIndex{1}));
  CHECK(a.contains(MultiIndex{2}));
  CHECK(a.contains(MultiIndex{3}));
  CHECK(a.contains(MultiIndex{3, 1}));
  CHECK(!a.contains(MultiIndex{1, 1}));  // not a sub-multiset of either seed
  CHECK(check_admissible(a).empty());
  // a set whose closure violates the grading bound is rejected
  CHECK_THROWS(make_admissible(5, {MultiIndex{2, 2}}));
  CHECK_THROWS(make_admissible(8, {MultiIndex{4}}));
}
