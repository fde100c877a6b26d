#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "torux/qfield.hpp"

using namespace torux;

namespace {
const Integer five(5);
Surd phi() { return Surd(Rational(1, 2), Rational(1, 2), five); }
}  // namespace

TEST_CASE("golden arithmetic") {
  CHECK(phi() * phi() == Surd(Rational(3, 2), Rational(1, 2), five));
  CHECK(phi() + Surd::rational(0, five) == phi());
  CHECK(phi().inverse() == Surd(Rational(-1, 2), Rational(1, 2), five));
  CHECK(phi() * phi().inverse() == Rational(1));
}

TEST_CASE("errors") {
  Surd r2 = Surd::root(Integer(2));
  CHECK_THROWS_AS(phi() + r2, Error);
  CHECK_THROWS_AS(phi() / Surd::rational(0, five), Error);
  CHECK_THROWS_AS(Surd::root(Integer(9)), Error);
  CHECK_THROWS_AS(Surd::root(Integer(-3)), Error);
}

TEST_CASE("sign") {
  CHECK(Surd(2, -1, five).sign() == -1);
  CHECK(Surd(0, 0, five).sign() == 0);
  CHECK(phi().sign() == 1);
  CHECK(Surd(-3, 1, Integer(8)).sign() == -1);
  CHECK(Surd(3, -1, Integer(8)).sign() == 1);
}

TEST_CASE("floor") {
  CHECK(phi().floor() == 1);
  CHECK((-Surd::root(Integer(2))).floor() == -2);
  CHECK(Surd(Rational(7, 2), 0, five).floor() == 3);
  CHECK(Surd(Rational(-7, 2), 0, five).floor() == -4);
  CHECK(Surd(Rational(-7, 2), 0, five).ceil() == -3);
}

TEST_CASE("galois conjugate") {
  CHECK(phi().conj() == Surd(Rational(1, 2), Rational(-1, 2), five));
  CHECK(Surd::rational(Rational(3, 7), five).conj() == Rational(3, 7));
  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Integer D(oracle::random_nonsquare(rng, 2, 300));
    Surd x = oracle::random_surd_with_D(rng, D), y = oracle::random_surd_with_D(rng, D);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
  }
}

TEST_CASE("field laws on random samples") {
  oracle::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    Integer D(oracle::random_nonsquare(rng, 2, 300));
    Surd x = oracle::random_surd_with_D(rng, D), y = oracle::random_surd_with_D(rng, D),
         z = oracle::random_surd_with_D(rng, D);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * x.inverse() == Rational(1));
    CHECK((x / y) * y == x);
    Surd n = x * x.conj();
    CHECK(n.is_rational());
    CHECK(n == x.norm());
  }
}

TEST_CASE("order is total and matches floats") {
  oracle::Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    Integer D(oracle::random_nonsquare(rng, 2, 300));
    Surd x = oracle::random_surd_with_D(rng, D), y = oracle::random_surd_with_D(rng, D);
    int cnt = (x < y) + (x == y) + (x > y);
    CHECK(cnt == 1);
    double dx = x.to_double(), dy = y.to_double();
    if (std::fabs(dx - dy) > 1e-6) CHECK((dx < dy) == (x < y));
    Integer f = x.floor();
    CHECK(Surd::rational(f, D) <= x);
    CHECK(x < Surd::rational(f + 1, D));
  }
}

TEST_CASE("text form") {
  CHECK(phi().to_string() == "1/2 + 1/2*sqrt(5)");
  CHECK(Surd(Rational(1, 3), Rational(1, 2), five).to_string() == "2/6 + 3/6*sqrt(5)");
}
