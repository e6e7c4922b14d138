#include <doctest.h>

#include "nalen/examples.hpp"
#include "nalen/io.hpp"

using namespace nalen;

namespace {
ErrorCode code_of(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal_consistency;
}
std::string message_of(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("duplicate structure constants are summed") {
    FieldSpec q = FieldSpec::rationals();
    Algebra a(q, 2, {{0, 0, 1, Scalar(q, 1)}, {0, 0, 1, Scalar(q, 2)}, {1, 1, 0, Scalar(q, 1)}, {1, 1, 0, Scalar(q, -1)}});
    REQUIRE(a.product_terms(0, 0).size() == 1);
    CHECK(a.product_terms(0, 0)[0].c.to_string() == "3");
    CHECK(a.product_terms(1, 1).empty());
  }

  TEST_CASE("multiplication is bilinear") {
    Algebra a = make_a_flex(FieldSpec::rationals());
    FieldSpec q = a.field();
    Element x = a.basis(0) + Scalar(q, 2) * a.basis(1);
    Element y = a.basis(0) + a.basis(4);
    // (e1 + 2 e2)(e1 + e5) = e5 + 2 e2 e5 = e5 - 2 e4
    Element expect = a.basis(4) - Scalar(q, 2) * a.basis(3);
    CHECK(a.multiply(x, y) == expect);
  }

  TEST_CASE("unity verification") {
    CHECK(verify_unity(make_spin_factor(3)).status == UnityStatus::holds);
    CHECK(verify_unity(make_a_flex()).status == UnityStatus::non_unital);
    FieldSpec q = FieldSpec::rationals();
    Algebra bad(q, 2, {{0, 0, 0, Scalar(q, 1)}}, Element::basis(q, 2, 0));
    auto u = verify_unity(bad);
    CHECK(u.status == UnityStatus::fails);
    CHECK(u.witness == 1u);
  }
}

TEST_SUITE("io") {
  TEST_CASE("minimal file") {
    Algebra a = parse_algebra("field gf 2\ndim 1\nmul 1 1 1 1\n");
    CHECK(a.dim() == 1);
    CHECK(a.multiply(a.basis(0), a.basis(0)) == a.basis(0));
  }

  TEST_CASE("round trip over all examples") {
    FieldSpec q = FieldSpec::rationals();
    std::vector<Algebra> all{make_a_flex(),
                             make_a_alt(FieldSpec::prime(3)),
                             make_group_algebra_z2n(3),
                             make_spin_factor(2, q),
                             make_matrix_algebra(3, q),
                             make_chain3(q),
                             make_nil3(FieldSpec::prime(5)),
                             make_unital_hull(make_a_flex(q)),
                             make_cayley_dickson(q, 2, {Scalar(q, -1), parse_scalar("-1/2", q)})};
    for (const auto& a : all) {
      Algebra b = parse_algebra(print_algebra(a));
      CHECK(b == a);
      CHECK(print_algebra(b) == print_algebra(a));
    }
  }

  TEST_CASE("comments, blank lines and the vector unity form") {
    Algebra a = parse_algebra(
        "# two by two diagonal\nfield rational\ndim 2   # size\n\nunital vector 1 1\n"
        "mul 1 1 1 1\nmul 2 2 2 1\n");
    REQUIRE(a.unital());
    CHECK(*a.unity() == a.basis(0) + a.basis(1));
  }

  TEST_CASE("rejections carry line numbers") {
    CHECK(code_of("field gf 4\ndim 1\n") == ErrorCode::parse_error);
    CHECK(message_of("field gf 4\ndim 1\n").find("line 1") != std::string::npos);
    CHECK(code_of("field rational\ndim 2\nmul 1 1 3 1\n") == ErrorCode::index_out_of_range);
    CHECK(message_of("field rational\ndim 2\nmul 1 1 3 1\n").find("line 3") != std::string::npos);
    CHECK(code_of("field rational\ndim 2\nmul 1 1 1 1\nmul 1 1 1 2\n") == ErrorCode::parse_error);
    CHECK(code_of("field rational\ndim 2\nfoo 1\n") == ErrorCode::parse_error);
    CHECK(code_of("dim 2\nfield rational\nmul 1 1 1 x\n") == ErrorCode::parse_error);
    CHECK(code_of("field rational\nmul 1 1 1 1\n") == ErrorCode::parse_error);
    CHECK(code_of("field rational\ndim 2\nunital 1\nmul 1 1 1 1\n") == ErrorCode::domain_error);
    CHECK(code_of("field rational\ndim 2\nlabels a a\n") == ErrorCode::parse_error);
    CHECK(code_of("field rational\ndim 2\nmul 1 1 1 1/0\n") == ErrorCode::division_by_zero);
  }

  TEST_CASE("generator specs") {
    Algebra a = make_a_flex();
    CHECK(parse_generator_spec(a, "basis").size() == 5);
    GeneratorSet s = parse_generator_spec(a, "1, 3");
    REQUIRE(s.size() == 2);
    CHECK(s.elements[1] == a.basis(2));
    CHECK_THROWS_AS(parse_generator_spec(a, "0"), Error);
    CHECK_THROWS_AS(parse_generator_spec(a, "6"), Error);
    GeneratorSet v = parse_generator_vectors(a, "1 1 0 0 0\n# c\n0 0 0 0 1\n");
    REQUIRE(v.size() == 2);
    CHECK(v.elements[0] == a.basis(0) + a.basis(1));
    CHECK_THROWS_AS(parse_generator_vectors(a, "1 0\n"), Error);
  }
}
