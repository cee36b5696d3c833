#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igusa/arith.hpp"

using namespace igusa;

TEST_CASE("context validation") {
  CHECK_NOTHROW(PadicContext(3, 1, 1, 1));
  CHECK_NOTHROW(PadicContext(5, 20, 6, 2));
  CHECK_THROWS_AS(PadicContext(2, 1, 1, 1), DomainError);   // p = 2 rejected
  CHECK_THROWS_AS(PadicContext(9, 1, 1, 1), DomainError);   // composite
  CHECK_THROWS_AS(PadicContext(5, 0, 1, 1), DomainError);   // precision
  CHECK_THROWS_AS(PadicContext(5, 1, 10, 1), DomainError);  // p | N
  CHECK_THROWS_AS(PadicContext(5, 1, 1, 0), DomainError);   // genus
  CHECK(PadicContext(5, 1, 1, 2).dg() == 3);
  CHECK(PadicContext(5, 1, 1, 3).dg() == 6);
}

TEST_CASE("valuation") {
  PadicContext c3(3, 2, 1, 1), c5(5, 3, 1, 1), c7(7, 1, 1, 1);
  CHECK(valuation(Rat(9, 5), c3) == 2);
  CHECK(!valuation(Rat(0), c5).has_value());  // +infinity
  CHECK(valuation(Rat(1, 3), c3) == -1);
  CHECK(valuation(Rat(-27), c3) == 3);
  CHECK(valuation(Rat(14, 3), c7) == 1);

  // v(ab) = v(a) + v(b); v(a+b) >= min(v(a), v(b))
  std::vector<Rat> samples = {Rat(9, 5), Rat(1, 3), Rat(-27), Rat(7, 2), Rat(5), Rat(2, 9)};
  for (const auto& a : samples)
    for (const auto& b : samples) {
      CHECK(*valuation(a * b, c3) == *valuation(a, c3) + *valuation(b, c3));
      auto vs = valuation(a + b, c3);
      long lo = std::min(*valuation(a, c3), *valuation(b, c3));
      if (vs) CHECK(*vs >= lo);
    }
}

TEST_CASE("invert_unit") {
  PadicContext c5(5, 2, 1, 1), c7(7, 1, 1, 1);
  CHECK(invert_unit(Rat(2, 3), c5) == Rat(3, 2));
  CHECK_THROWS_AS(invert_unit(Rat(5), c5), NotAUnit);
  CHECK_THROWS_AS(invert_unit(Rat(0), c5), NotAUnit);
  CHECK(invert_unit(Rat(-1), c7) == Rat(-1));
  // exact two-sided inverse
  std::vector<Rat> units = {Rat(2, 3), Rat(-1), Rat(7, 11), Rat(4)};
  for (const auto& u : units) CHECK(u * invert_unit(u, c5) == Rat(1));
}

TEST_CASE("reduce_mod") {
  CHECK(reduce_mod(Rat(1, 2), PadicContext(3, 2, 1, 1)) == 5);  // 2*5 = 10 = 1 mod 9
  CHECK(reduce_mod(Rat(0), PadicContext(5, 3, 1, 1)) == 0);
  CHECK_THROWS_AS(reduce_mod(Rat(1, 3), PadicContext(3, 1, 1, 1)), NotIntegral);

  // ring homomorphism on p-integral inputs
  PadicContext c(7, 3, 1, 1);
  Int mod = 343;
  std::vector<Rat> xs = {Rat(3, 2), Rat(-5, 4), Rat(7), Rat(1, 6)};
  for (const auto& a : xs)
    for (const auto& b : xs) {
      CHECK(reduce_mod(a + b, c) == (reduce_mod(a, c) + reduce_mod(b, c)) % mod);
      CHECK(reduce_mod(a * b, c) == (reduce_mod(a, c) * reduce_mod(b, c)) % mod);
    }
}

TEST_CASE("rational round trip") {
  CHECK(rat_str(parse_rat("3/4")) == "3/4");
  CHECK(rat_str(parse_rat("-6/8")) == "-3/4");
  CHECK(rat_str(parse_rat("5")) == "5");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK_THROWS_AS(parse_rat("x"), SyntaxError);
  CHECK_THROWS_AS(parse_rat(""), SyntaxError);
}
