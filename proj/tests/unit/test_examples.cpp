#include <doctest.h>

#include "nalen/examples.hpp"
#include "nalen/identities.hpp"
#include "support/oracles.hpp"

using namespace nalen;

namespace {

Element basis_product(const Algebra& a, std::size_t i, std::size_t j) {
  return oracle::multiply(a, a.basis(i), a.basis(j));
}

bool commutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(basis_product(a, i, j) == basis_product(a, j, i))) return false;
  return true;
}

}  // namespace

TEST_SUITE("examples") {
  TEST_CASE("group algebra") {
    Algebra a = make_group_algebra_z2n(3);
    CHECK(a.dim() == 8);
    CHECK(a.field().char_two());
    REQUIRE(a.unital());
    CHECK(*a.unity() == a.basis(0));
    for (std::size_t x = 0; x < 8; ++x)
      for (std::size_t y = 0; y < 8; ++y) CHECK(basis_product(a, x, y) == a.basis(x ^ y));
    CHECK(a.label(5) == "e101");
    CHECK_THROWS_AS(make_group_algebra_z2n(7), Error);
  }

  TEST_CASE("separating tables") {
    Algebra f = make_a_flex(), g = make_a_alt();
    CHECK(f.dim() == 5);
    CHECK(g.dim() == 5);
    CHECK(!f.unital());
    CHECK(f.label(0) == "e1");
    CHECK(g.label(4) == "f5");
    CHECK(check_descendingly_flexible(f).holds());
    CHECK(check_descendingly_alternative(g).holds());
    CHECK(make_a_flex(FieldSpec::rationals()).field().is_rational());
  }

  TEST_CASE("spin factor") {
    Algebra s = make_spin_factor(3);
    CHECK(s.dim() == 4);
    REQUIRE(s.unital());
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 1; j <= 3; ++j) CHECK(basis_product(s, i, j) == (i == j ? s.basis(0) : s.zero()));
    CHECK(commutative(s));
  }

  TEST_CASE("matrix units") {
    Algebra m = make_matrix_algebra(2);
    CHECK(m.dim() == 4);
    CHECK(basis_product(m, 1, 2) == m.basis(0));  // E12 E21 = E11
    CHECK(basis_product(m, 2, 1) == m.basis(3));
    CHECK(basis_product(m, 1, 1).is_zero());
    CHECK(*m.unity() == m.basis(0) + m.basis(3));
    CHECK(m.label(1) == "E12");
    CHECK_THROWS_AS(make_matrix_algebra(7), Error);
  }

  TEST_CASE("nilpotent chains") {
    Algebra c = make_chain3();
    Element a = c.basis(0);
    CHECK(c.multiply(a, a) == c.basis(1));
    CHECK(c.multiply(c.multiply(a, a), a) == c.basis(2));
    CHECK(c.multiply(a, c.multiply(a, a)).is_zero());
    Algebra n = make_nil3();
    CHECK(n.multiply(a, a) == n.basis(1));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i + j > 0) CHECK(basis_product(n, i, j).is_zero());
  }

  TEST_CASE("unital hull") {
    Algebra h = make_unital_hull(make_chain3());
    CHECK(h.dim() == 4);
    REQUIRE(h.unital());
    CHECK(*h.unity() == h.basis(3));
    CHECK(h.label(3) == "e");
    CHECK(verify_unity(h).status == UnityStatus::holds);
    try {
      make_unital_hull(h);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::already_unital);
    }
  }

  TEST_CASE("doubling") {
    FieldSpec q = FieldSpec::rationals();
    Algebra base = make_cayley_dickson(q, 0, {});
    CHECK(base.dim() == 1);
    Algebra c = make_cayley_dickson(q, 1, {Scalar(q, -1)});
    CHECK(c.dim() == 2);
    CHECK(basis_product(c, 1, 1) == -c.basis(0));
    CHECK(commutative(c));
    Algebra h = make_cayley_dickson(q, 2, {Scalar(q, -1), Scalar(q, -1)});
    CHECK(!commutative(h));
    CHECK(check_alternative(h).holds());
    Algebra o = make_cayley_dickson(q, 3, {Scalar(q, -1), Scalar(q, -1), Scalar(q, -1)});
    CHECK(o.dim() == 8);
    CHECK(check_alternative(o).holds());
    CHECK_THROWS_AS(make_cayley_dickson(q, 2, {Scalar(q, -1)}), Error);
  }

  TEST_CASE("conjugation twists") {
    FieldSpec q = FieldSpec::rationals();
    Algebra c = make_cayley_dickson(q, 1, {Scalar(q, -1)});
    Algebra both = twist_conjugation(c, TwistSide::both);
    CHECK(commutative(both));
    CHECK(!both.unital());
    Algebra left = twist_conjugation(c, TwistSide::left);
    CHECK(basis_product(left, 1, 0) == -left.basis(1));
    CHECK(basis_product(left, 0, 1) == left.basis(1));
    CHECK_THROWS_AS(twist_conjugation(make_chain3(), TwistSide::left), Error);
  }

  TEST_CASE("names") {
    auto names = example_names();
    CHECK(std::find(names.begin(), names.end(), "z2n") != names.end());
    CHECK(std::find(names.begin(), names.end(), "cd") != names.end());
  }
}
