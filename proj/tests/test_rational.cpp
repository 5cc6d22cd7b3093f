#include <doctest.h>

#include "support.hpp"

using namespace liftreg;

TEST_CASE("rationals are canonical and exact") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(2, -4).den() == 2);
  CHECK(Rat(0, 7).den() == 1);
  CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
  CHECK((Rat(1, 3) * Rat(3, 7)) == Rat(1, 7));
  CHECK((Rat(1, 3) - Rat(1, 3)).is_zero());

  // (a/b)+(c/d) = (ad+bc)/bd reduced, on random inputs
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rat a = testsupport::random_rat(rng, 30, 12);
    Rat b = testsupport::random_rat(rng, 30, 12);
    Rat s = a + b;
    CHECK(s * Rat(a.den() * b.den()) == Rat(a.num() * b.den() + b.num() * a.den()));
    Int g;
    mpz_gcd(g.get_mpz_t(), s.num().get_mpz_t(), s.den().get_mpz_t());
    CHECK(g == 1);
    CHECK(s.den() > 0);
  }
}

TEST_CASE("rational parsing and printing round-trip") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(Rat::parse("5") == Rat(5));
  CHECK(Rat::parse(" -12 ") == Rat(-12));
  CHECK(Rat(7, 2).str() == "7/2");
  CHECK(Rat(-7).str() == "-7");
  CHECK(Rat(4, 2).str() == "2");
  CHECK_THROWS_AS(Rat::parse("1.5"), Error);
  CHECK_THROWS_AS(Rat::parse("a/b"), Error);
  CHECK_THROWS_AS(Rat::parse("1/0"), Error);
  CHECK(parse_rat_vec("1/2,-3,0") == RatVec{Rat(1, 2), Rat(-3), Rat(0)});
}

TEST_CASE("floor and ceil") {
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(4).floor() == 4);
  CHECK(Rat(4).ceil() == 4);
}

TEST_CASE("primitive vector") {
  CHECK(primitive_vector(RatVec{Rat(1, 2), Rat(1, 2)}) == IntVec{1, 1});
  // direction is preserved, only the scale changes
  CHECK(primitive_vector(RatVec{Rat(-2), Rat(0)}) == IntVec{-1, 0});
  CHECK(primitive_vector(RatVec{Rat(2, 3), Rat(-4, 3)}) == IntVec{1, -2});
  CHECK_THROWS_AS(primitive_vector(RatVec{Rat(0), Rat(0)}), Error);
}
