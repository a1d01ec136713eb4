#include "doctest.h"

#include "cusg/rational.hpp"
#include "cusg/supernatural.hpp"

using namespace cusg;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(7, 3) - Rat(1, 3) == Rat(2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(Rat(-1, -2) == Rat(1, 2));
  CHECK(Rat(1, -2) < Rat(0));
}

TEST_CASE("rational ordering") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(2, 6) <= Rat(1, 3));
  CHECK(Rat(5, 6) > Rat(4, 6));
  CHECK(min(Rat(1, 3), Rat(1, 2)) == Rat(1, 3));
  CHECK(max(Rat(1, 3), Rat(1, 2)) == Rat(1, 2));
}

TEST_CASE("rational parse and print round-trip") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("5") == Rat(5));
  CHECK(Rat(3, 4).str() == "3/4");
  CHECK(Rat(8, 4).str() == "2");
  CHECK_THROWS_AS(Rat::parse("1/0"), CuError);
  CHECK_THROWS_AS(Rat::parse("a"), CuError);
  CHECK_THROWS_AS(Rat::parse("1/2x"), CuError);
}

TEST_CASE("supernatural parsing and divisibility") {
  auto p = Supernatural::parse("2^inf*3^2");
  CHECK(p.divides_int(2));
  CHECK(p.divides_int(1024));
  CHECK(p.divides_int(9));
  CHECK(!p.divides_int(27));
  CHECK(!p.divides_int(5));
  CHECK(p.str() == "2^inf*3^2");

  auto six = Supernatural::from_int(6);
  CHECK(six.divides_int(6));
  CHECK(!six.divides_int(4));
  CHECK(six.divides(Supernatural::from_int(2)));
  CHECK(!Supernatural::from_int(3).divides(Supernatural::from_int(2)));

  auto six_inf = Supernatural::parse("6^inf");
  CHECK(six_inf.divides(Supernatural::parse("2^inf")));
  CHECK(six_inf.divides_int(36));
  CHECK(six_inf.stage(1) == 6);
  CHECK(six_inf.stage(3) == 216);
  CHECK(Supernatural::parse("2^inf").stage(4) == 16);

  // Finite supernaturals stop multiplying at their exponent.
  CHECK(Supernatural::from_int(12).stage(5) == 12);
}

TEST_CASE("supernatural products") {
  auto p = Supernatural::parse("2^inf") * Supernatural::parse("3^inf");
  CHECK(p == Supernatural::parse("6^inf"));
  CHECK(denominator_divides(Rat(1, 12), p));
  CHECK(!denominator_divides(Rat(1, 5), p));
}
