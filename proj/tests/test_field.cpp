#include "doctest.h"

#include "kuni/errors.hpp"
#include "kuni/field.hpp"
#include "oracles.hpp"

using namespace kuni;

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(5));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(7917));
}

TEST_CASE("construction rejects non-prime and oversized moduli") {
  CHECK_THROWS_AS(PrimeField(4), InvalidInput);
  CHECK_THROWS_AS(PrimeField(1), InvalidInput);
  CHECK_THROWS_AS(PrimeField(1048583), InvalidInput);  // prime but >= 2^20
  CHECK_NOTHROW(PrimeField(1048573));
}

TEST_CASE("element arithmetic reduces mod p") {
  const PrimeField f(5);
  CHECK((f.element(3) + f.element(4)).value() == 2);
  CHECK(add(f.element(3), f.element(4)).value() == 2);
  CHECK((f.element(2) * f.element(3)).value() == 1);
  CHECK((f.element(1) - f.element(3)).value() == 3);
  CHECK((-f.element(2)).value() == 3);
  CHECK(f.element(-7).value() == 3);
  CHECK((f.element(4) / f.element(2)).value() == 2);
  CHECK(mul_inv(f.element(3)).value() == 2);
  CHECK(power(f.element(3), 4).value() == 1);
  CHECK(power(f.element(0), 0).value() == 1);
}

TEST_CASE("inverse of zero and cross-field mixing are errors") {
  const PrimeField f(5);
  CHECK_THROWS_AS(mul_inv(f.zero()), InvalidInput);
  CHECK_THROWS_AS(f.element(1) / f.zero(), InvalidInput);
  CHECK_THROWS_AS(f.element(1) + PrimeField(7).element(1), FieldMismatch);
  CHECK_THROWS_AS(f.element(1) * PrimeField(7).element(1), FieldMismatch);
}

TEST_CASE("inverses agree with exhaustive search") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 101u}) {
    const PrimeField f(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      CHECK(mul_inv(f.element(a)).value() == oracle::inverse_by_search(a, p));
      CHECK(f.inv(a) == oracle::inverse_by_search(a, p));
    }
  }
}

TEST_CASE("multiplicative order agrees with repeated multiplication") {
  const PrimeField f7(7);
  CHECK(multiplicative_order(f7.element(2)) == 3);
  CHECK(multiplicative_order(f7.element(3)) == 6);
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const PrimeField f(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      const auto expected = static_cast<std::uint64_t>(oracle::order_by_search(a, p));
      CHECK(multiplicative_order(f.element(a)) == expected);
      CHECK(is_primitive(f.element(a)) == (expected == p - 1));
    }
  }
  CHECK_THROWS_AS(multiplicative_order(f7.zero()), InvalidInput);
}

TEST_CASE("smallest and largest primitive elements") {
  CHECK(find_primitive(PrimeField(2)).value() == 1);
  CHECK(find_primitive(PrimeField(5)).value() == 2);
  CHECK(find_largest_primitive(PrimeField(5)).value() == 3);
  CHECK(find_primitive(PrimeField(7)).value() == 3);
  CHECK(find_largest_primitive(PrimeField(7)).value() == 5);
}

TEST_CASE("field axioms hold exhaustively over GF(7)") {
  const PrimeField f(7);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      const auto x = f.element(a), y = f.element(b);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x - y) + y == x);
      for (int c = 0; c < 7; ++c) {
        const auto z = f.element(c);
        CHECK(x * (y + z) == x * y + x * z);
      }
      if (b != 0) CHECK((x / y) * y == x);
    }
}
