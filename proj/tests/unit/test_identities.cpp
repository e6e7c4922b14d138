#include <doctest.h>

#include "nalen/examples.hpp"
#include "nalen/identities.hpp"
#include "support/oracles.hpp"

using namespace nalen;

namespace {

// ab = c, ce = d: (ab)e = d while every monomial of P(a, b, e) vanishes or lies in Lin(a, b, e, c)
Algebra non_mixing() {
  FieldSpec q = FieldSpec::rationals();
  Scalar one = Scalar::one(q);
  return Algebra(q, 5, {{0, 1, 3, one}, {3, 2, 4, one}}, std::nullopt, {"a", "b", "e", "c", "d"});
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("separating tables") {
    Algebra f = make_a_flex();
    CHECK(check_descendingly_flexible(f).holds());
    Verdict da = check_descendingly_alternative(f);
    REQUIRE(da.fails());
    REQUIRE(da.witness);
    CHECK(da.witness->relation == Relation::da_pair);
    CHECK(da.witness->arguments == std::vector<Element>{f.basis(0), f.basis(1)});
    CHECK(da.witness->violation.term == "a(ab)");
    CHECK(da.witness->violation.value == f.basis(3));
    CHECK(replay_witness(f, *da.witness));

    Algebra g = make_a_alt();
    CHECK(check_descendingly_alternative(g).holds());
    Verdict df = check_descendingly_flexible(g);
    REQUIRE(df.fails());
    CHECK(df.witness->relation == Relation::df_pair);
    CHECK(df.witness->arguments == std::vector<Element>{g.basis(0), g.basis(1)});
    CHECK(df.witness->violation.term == "a(ba)");
    CHECK(df.witness->violation.value == g.basis(3));
  }

  TEST_CASE("tables hold over other fields too") {
    for (auto f : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
      CHECK(check_descendingly_flexible(make_a_flex(f)).holds());
      CHECK(check_descendingly_alternative(make_a_alt(f)).holds());
      CHECK(check_descendingly_alternative(make_a_flex(f)).fails());
      CHECK(check_descendingly_flexible(make_a_alt(f)).fails());
    }
  }

  TEST_CASE("matrix algebra counterexample") {
    Algebra m = make_matrix_algebra(4);
    auto e = [&](int i, int j) { return m.basis((i - 1) * 4 + (j - 1)); };
    auto vf = check_descending_at(m, Variant::flex, e(1, 2), e(2, 3), e(3, 4));
    auto va = check_descending_at(m, Variant::alt, e(1, 2), e(2, 3), e(3, 4));
    REQUIRE(vf);
    REQUIRE(va);
    CHECK(vf->value == e(1, 4));
    CHECK(va->value == e(1, 4));
    CHECK(check_descendingly_flexible(m).fails());
    CHECK(check_descendingly_alternative(m).fails());
    CHECK(check_flexible(m).holds());
    CHECK(check_alternative(m).holds());
  }

  TEST_CASE("spin factors") {
    for (std::size_t n = 1; n <= 3; ++n) {
      Algebra s = make_spin_factor(n);
      CHECK(check_flexible(s).holds());
      CHECK(check_descendingly_flexible(s).holds());
      CHECK(check_descendingly_alternative(s).holds());
      CHECK(check_mixing(s).holds());
    }
  }

  TEST_CASE("chain algebra is mixing and right sliding but not left sliding") {
    Algebra c = make_chain3();
    CHECK(check_mixing(c).holds());
    CHECK(check_right_sliding(c).holds());
    Verdict l = check_left_sliding(c);
    REQUIRE(l.fails());
    CHECK(replay_witness(c, *l.witness));
  }

  TEST_CASE("a genuinely non-mixing algebra") {
    Algebra a = non_mixing();
    Verdict v = check_mixing(a);
    REQUIRE(v.fails());
    CHECK(replay_witness(a, *v.witness));
    CHECK(v.witness->violation.value == a.basis(4));
    ClassificationReport r = classify(a);
    CHECK_FALSE(r.descendingly_flexible.holds());
    CHECK_FALSE(r.descendingly_alternative.holds());
    CHECK(r.inconsistencies.empty());
  }

  TEST_CASE("sufficient condition") {
    IdentityOptions o;
    SufficientReport s = check_sufficient_condition(make_spin_factor(3), Variant::flex, o);
    CHECK(s.verdict.holds());
    CHECK(s.informative > 0);
    CHECK(s.forced == 0);  // quadratic: aa already lies in Lin(1, a)
    FieldSpec q = FieldSpec::rationals();
    Algebra one(q, 1, {{0, 0, 0, Scalar::one(q)}});
    CHECK(check_sufficient_condition(one, Variant::flex, o).verdict.kind == VerdictKind::inconclusive);
    SufficientReport alt = check_sufficient_condition(make_a_alt(), Variant::alt, o);
    CHECK(alt.verdict.holds());
    CHECK(alt.forced > 0);
    CHECK(check_sufficient_condition(make_group_algebra_z2n(2), Variant::alt, o).verdict.holds());
  }

  TEST_CASE("classification is deterministic and thread independent") {
    Algebra a = make_unital_hull(make_a_alt(FieldSpec::prime(3)));
    IdentityOptions one, many;
    many.threads = 4;
    ClassificationReport x = classify(a, one), y = classify(a, many);
    for (auto [p, q] : {std::pair{&x.flexible, &y.flexible}, std::pair{&x.mixing, &y.mixing},
                        std::pair{&x.descendingly_flexible, &y.descendingly_flexible},
                        std::pair{&x.descendingly_alternative, &y.descendingly_alternative}}) {
      CHECK(p->kind == q->kind);
      CHECK(p->samples == q->samples);
      CHECK(p->witness.has_value() == q->witness.has_value());
      if (p->witness && q->witness) CHECK(p->witness->arguments == q->witness->arguments);
    }
  }

  TEST_CASE("implication audit on the example catalogue") {
    FieldSpec q = FieldSpec::rationals();
    for (const auto& a : {make_a_flex(), make_a_alt(), make_group_algebra_z2n(2), make_spin_factor(2, q),
                          make_matrix_algebra(2, q), make_chain3(q), make_nil3(q), make_unital_hull(make_a_flex())}) {
      ClassificationReport r = classify(a);
      CHECK(r.inconsistencies.empty());
      for (const Verdict* v : {&r.flexible, &r.alternative, &r.left_sliding, &r.right_sliding, &r.mixing,
                               &r.descendingly_flexible, &r.descendingly_alternative})
        if (v->fails()) {
          REQUIRE(v->witness);
          CHECK(replay_witness(a, *v->witness));
        }
    }
  }

  TEST_CASE("quaternions are alternative") {
    FieldSpec q = FieldSpec::rationals();
    Algebra h = make_cayley_dickson(q, 2, {Scalar(q, -1), Scalar(q, -1)});
    CHECK(check_alternative(h).holds());
    CHECK(check_flexible(h).holds());
  }
}
