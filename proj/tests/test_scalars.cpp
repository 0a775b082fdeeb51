#include <doctest.h>

#include <random>

#include "satake/scalar.hpp"

using satake::Scalar;

namespace {

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)),
                mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_SUITE("scalars") {
  TEST_CASE("generators satisfy their minimal polynomials") {
    CHECK(Scalar::sqrt3() * Scalar::sqrt3() == Scalar(3));
    CHECK(Scalar::imag() * Scalar::imag() == Scalar(-1));
    const Scalar w = Scalar::omega();
    CHECK(w * w * w == Scalar(1));
    CHECK(w * w + w + Scalar(1) == Scalar(0));
    CHECK(conj(w) == w * w);
  }

  TEST_CASE("text round trip") {
    for (const char* s : {"0", "1", "-3/4", "r3", "1/2 + 3/2*r3", "(1 - r3)*i", "2 + (1/3*r3)*i"}) {
      const Scalar x = Scalar::parse(s);
      CHECK(Scalar::parse(x.str()) == x);
    }
    CHECK(Scalar::parse("-1/2 + 1/2*r3*i") == Scalar::rational(-1, 2) + Scalar::rational(1, 2) * Scalar::sqrt3() * Scalar::imag());
    CHECK_THROWS_AS(Scalar::parse("1/0"), satake::ScalarError);
    CHECK_THROWS_AS(Scalar::parse("x"), satake::ScalarError);
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
      const Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * y == y * x);
      CHECK(conj(x * y) == conj(x) * conj(y));
      if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
      Scalar acc = z;
      acc.add_product(x, y);
      CHECK(acc == z + x * y);
    }
  }

  TEST_CASE("exact sign of real elements") {
    CHECK(sign(Scalar(2) - Scalar::sqrt3()) == 1);
    CHECK(sign(Scalar::sqrt3() - Scalar(2)) == -1);
    CHECK(sign(Scalar(7) - Scalar(4) * Scalar::sqrt3()) == 1);  // 7 > 6.928
    CHECK(sign(Scalar(0)) == 0);
    CHECK_THROWS_AS(sign(Scalar::imag()), satake::ScalarError);
    CHECK_THROWS_AS(Scalar(0).inverse(), satake::ScalarError);
  }

  TEST_CASE("lex order is total and consistent with equality") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
      const Scalar x = random_scalar(rng), y = random_scalar(rng);
      CHECK((lex_compare(x, y) == 0) == (x == y));
      CHECK((lex_compare(x, y) < 0) == (lex_compare(y, x) > 0));
    }
  }
}
