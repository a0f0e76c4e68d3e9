#include "tilekit/rational.hpp"

#include <doctest.h>

#include <random>

using namespace tilekit;

TEST_CASE("rational strings are lowest terms with positive denominator") {
  CHECK(to_string(rat(0, 1)) == "0");
  CHECK(to_string(rat(0, 7)) == "0");
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK(to_string(rat(-2, 4)) == "-1/2");
  CHECK(to_string(rat(2, -4)) == "-1/2");
  CHECK(to_string(rat(5, 1)) == "5");
  CHECK(rat_from_string("0") == 0);
  CHECK(rat_from_string("-7/3") == rat(-7, 3));
  CHECK(rat_from_string("14/6") == rat(7, 3));
  CHECK_THROWS(rat_from_string("1/0"));
  CHECK_THROWS(rat_from_string(""));
  CHECK_THROWS(rat_from_string("a/b"));
}

TEST_CASE("string round-trip is bit-exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 500; ++i) {
    long den = d(rng);
    if (den == 0) den = 1;
    Rational r = rat(d(rng), den);
    CHECK(rat_from_string(to_string(r)) == r);
  }
}

TEST_CASE("arithmetic is exact") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-10000, 10000);
  for (int i = 0; i < 300; ++i) {
    long db = d(rng), dd = d(rng);
    Rational a = rat(d(rng), db == 0 ? 1 : db);
    Rational b = rat(d(rng), dd == 0 ? 1 : dd);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
  }
}

TEST_CASE("integer and half-integer predicates") {
  CHECK(is_integer(rat(6, 3)));
  CHECK(!is_integer(rat(1, 2)));
  CHECK(is_half_integer(rat(1, 2)));
  CHECK(is_half_integer(rat(-7, 2)));
  CHECK(is_half_integer(rat(3, 1)));
  CHECK(!is_half_integer(rat(1, 3)));
  CHECK(floor_int(rat(-3, 2)) == -2);
  CHECK(ceil_int(rat(-3, 2)) == -1);
  CHECK(floor_int(rat(7, 2)) == 3);
}
