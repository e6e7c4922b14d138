#include <doctest.h>

#include "nalen/field.hpp"

using namespace nalen;

TEST_SUITE("field") {
  TEST_CASE("rational arithmetic is exact") {
    FieldSpec q = FieldSpec::rationals();
    Scalar a = parse_scalar("1/3", q), b = parse_scalar("-1/6", q);
    CHECK((a + b).to_string() == "1/6");
    CHECK((a * b).to_string() == "-1/18");
    CHECK((a / b).to_string() == "-2");
    CHECK(parse_scalar("4/6", q).to_string() == "2/3");
    CHECK(parse_scalar("\xE2\x88\x92" "3", q).to_string() == "-3");
  }

  TEST_CASE("prime field arithmetic reduces modulo p") {
    FieldSpec f = FieldSpec::prime(7);
    Scalar a = Scalar(f, 5), b = Scalar(f, 4);
    CHECK((a + b).to_string() == "2");
    CHECK((a * b).to_string() == "6");
    CHECK((a * a.inverse()).is_one());
    CHECK(parse_scalar("-1", f).to_string() == "6");
    CHECK(parse_scalar("1/2", f).to_string() == "4");
    for (std::uint64_t x = 1; x < 7; ++x) CHECK((Scalar::from_residue(f, x) * Scalar::from_residue(f, x).inverse()).is_one());
  }

  TEST_CASE("errors") {
    FieldSpec q = FieldSpec::rationals();
    CHECK_THROWS_AS(parse_scalar("1/0", q), Error);
    try {
      Scalar::zero(q).inverse();
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::division_by_zero);
    }
    try {
      (void)(Scalar::one(q) + Scalar::one(FieldSpec::prime(2)));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::field_mismatch);
    }
    CHECK_THROWS_AS(FieldSpec::prime(4), Error);
    CHECK_THROWS_AS(FieldSpec::prime(4294967311ull), Error);
    CHECK_THROWS_AS(parse_scalar("x", q), Error);
    CHECK_THROWS_AS(parse_scalar("1/-2", q), Error);
  }

  TEST_CASE("characteristic two flag") {
    CHECK(FieldSpec::prime(2).char_two());
    CHECK_FALSE(FieldSpec::prime(3).char_two());
    CHECK_FALSE(FieldSpec::rationals().char_two());
    CHECK(FieldSpec::prime(5).name() == "gf 5");
  }

  TEST_CASE("primality by trial division") {
    int count = 0;
    for (std::uint64_t n = 0; n < 100; ++n) count += is_prime_number(n);
    CHECK(count == 25);
    CHECK(is_prime_number(4294967291ull));
  }
}
