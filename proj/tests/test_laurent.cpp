#include <random>

#include "doctest.h"

#include "affhecke/laurent.hpp"

using namespace affhecke;

namespace {

LaurentInt L(const char* s) { return LaurentInt::parse(s); }

LaurentInt random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), exp(-5, 5), coef(-4, 4);
  LaurentInt a;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) a += LaurentInt::monomial(coef(rng), exp(rng));
  return a;
}

}  // namespace

TEST_CASE("ring operations") {
  const LaurentInt v = LaurentInt::v_power(1), vi = LaurentInt::v_power(-1);
  CHECK((v + vi) * (v - vi) == LaurentInt::v_power(2) - LaurentInt::v_power(-2));
  CHECK(L("v^2 - 3*v^-1") + LaurentInt() == L("v^2 - 3*v^-1"));
  const LaurentInt oneq = LaurentInt(1) + LaurentInt::q_power(1);
  CHECK(oneq * oneq == L("v^4 + 2*v^2 + 1"));
  CHECK((v - v).is_zero());
  CHECK(-L("2*v") == L("-2*v"));
}

TEST_CASE("bar involution") {
  CHECK(L("v^2 - 3*v^-1").bar() == L("v^-2 - 3*v"));
  CHECK(LaurentInt::v_plus_vinv().bar() == LaurentInt::v_plus_vinv());
  CHECK(LaurentInt(5).bar() == LaurentInt(5));

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const LaurentInt a = random_laurent(rng), b = random_laurent(rng);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK(a.bar().bar() == a);
  }
}

TEST_CASE("leading term") {
  CHECK(LaurentInt::v_plus_vinv().leading() == std::make_pair(1, Integer(1)));
  CHECK(L("-2*v^4 + v").leading() == std::make_pair(4, Integer(-2)));
  CHECK(LaurentInt(7).leading() == std::make_pair(0, Integer(7)));
  CHECK_THROWS_WITH(LaurentInt().leading(), "zero polynomial");
}

TEST_CASE("specialization") {
  CHECK(LaurentInt::v_plus_vinv().specialize(1) == 2);
  CHECK(LaurentInt::v_power(2).specialize(2) == 4);
  CHECK(LaurentInt().specialize(3) == 0);
  CHECK(L("v^-1").specialize(Rational(1, 2)) == 2);
  CHECK_THROWS(LaurentInt(1).specialize(0));

  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const LaurentInt a = random_laurent(rng), b = random_laurent(rng);
    const Rational x(3, 2);
    CHECK((a * b).specialize(x) == a.specialize(x) * b.specialize(x));
    CHECK((a + b).specialize(x) == a.specialize(x) + b.specialize(x));
  }
}

TEST_CASE("text form round trip") {
  CHECK(L("v^2 - 3*v^-1").str() == "v^2 - 3*v^-1");
  CHECK(LaurentInt().str() == "0");
  CHECK(LaurentInt::v_plus_vinv().str() == "v + v^-1");
  CHECK((LaurentInt(1) + LaurentInt::q_power(1)).q_str() == "1+q");
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const LaurentInt a = random_laurent(rng);
    CHECK(LaurentInt::parse(a.str()) == a);
    CHECK(LaurentInt::parse(a.str()).str() == a.str());
  }
  CHECK_THROWS(L("3*"));
}

TEST_CASE("exact division") {
  LaurentInt q;
  CHECK(try_divide(L("v^3 + v"), LaurentInt::v_plus_vinv(), q));
  CHECK(q == LaurentInt::v_power(2));
  CHECK_FALSE(try_divide(LaurentInt(1), LaurentInt::v_plus_vinv(), q));
  CHECK(LaurentInt::v_power(-3).is_unit());
  CHECK((-LaurentInt::v_power(2)).is_unit());
  CHECK_FALSE(LaurentInt(2).is_unit());
}
