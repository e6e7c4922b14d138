#include <doctest.h>

#include "nalen/examples.hpp"
#include "nalen/identities.hpp"
#include "nalen/spans.hpp"
#include "support/oracles.hpp"

using namespace nalen;

namespace {

std::vector<Algebra> small_examples() {
  FieldSpec q = FieldSpec::rationals();
  return {make_a_flex(), make_a_alt(), make_group_algebra_z2n(2), make_spin_factor(2, q), make_spin_factor(3, q),
          make_matrix_algebra(2, q), make_chain3(q), make_nil3(q), make_unital_hull(make_a_flex(q))};
}

std::vector<std::vector<std::size_t>> small_sets(std::size_t dim) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < dim; ++i) {
    out.push_back({i});
    for (std::size_t j = i + 1; j < dim; ++j) out.push_back({i, j});
  }
  return out;
}

}  // namespace

TEST_SUITE("spans") {
  TEST_CASE("SpanBasis is a reduced echelon basis") {
    FieldSpec q = FieldSpec::rationals();
    SpanBasis b(q, 3);
    Element x(q, {Scalar(q, 1), Scalar(q, 2), Scalar(q, 3)});
    Element y(q, {Scalar(q, 2), Scalar(q, 4), Scalar(q, 7)});
    CHECK(b.insert(x));
    CHECK(b.insert(y));
    CHECK_FALSE(b.insert(x + y));
    CHECK(b.rank() == 2);
    auto expect = oracle::rref_of({x, y});
    REQUIRE(expect.size() == 2);
    for (std::size_t r = 0; r < 2; ++r) CHECK(b.rows()[r].coords() == expect[r]);
  }

  TEST_CASE("incremental general mode equals the full-bracketing oracle") {
    for (const auto& a : small_examples()) {
      for (const auto& idx : small_sets(a.dim())) {
        GeneratorSet s = basis_generators(a, idx);
        SpanEngine e(a, s, SpanMode::general);
        for (std::size_t m = 1; m <= 5; ++m) {
          e.step();
          auto expect = oracle::brute_span(a, s.elements, m);
          REQUIRE(e.span().rank() == expect.size());
          for (std::size_t r = 0; r < expect.size(); ++r) CHECK(e.span().rows()[r].coords() == expect[r]);
        }
      }
    }
  }

  TEST_CASE("diff sequence examples") {
    Algebra z = make_group_algebra_z2n(2);
    DiffSequence d = diff_sequence(z, basis_generators(z, {1, 2}), SpanMode::general);
    CHECK(d.d == std::vector<std::size_t>{1, 2, 1});
    CHECK(d.length == 2);
    CHECK(d.generating);

    Algebra f = make_a_flex();
    d = diff_sequence(f, basis_generators(f, {0, 1}), SpanMode::mixing);
    CHECK(d.d == std::vector<std::size_t>{0, 2, 2, 1});
    CHECK(d.length == 3);
    CHECK(d.generating);
    CHECK(d.stabilized_by == Stabilization::mixing_criterion);

    GeneratorSet empty;
    d = diff_sequence(f, empty, SpanMode::general);
    CHECK(d.d == std::vector<std::size_t>{0});
    CHECK(d.length == 0);
    CHECK_FALSE(d.generating);

    Algebra c = make_chain3();
    d = diff_sequence(c, basis_generators(c, {0}), SpanMode::general);
    CHECK(d.length == 3);
    CHECK(d.stabilized_by == Stabilization::closure_criterion);
  }

  TEST_CASE("group algebra generator letters have length n") {
    for (std::size_t n = 1; n <= 4; ++n) {
      Algebra a = make_group_algebra_z2n(n);
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) idx.push_back(std::size_t{1} << i);
      CHECK(length_of_set(a, basis_generators(a, idx)) == n);
    }
  }

  TEST_CASE("d1 is the rank of S over Lin_0") {
    Algebra a = make_spin_factor(2);
    FieldSpec q = a.field();
    GeneratorSet s;
    s.elements = {a.basis(0) + a.basis(1), a.basis(1), a.basis(0)};
    DiffSequence d = diff_sequence(a, s, SpanMode::general);
    CHECK(d.d[0] == 1);
    CHECK(d.d[1] == 1);
  }

  TEST_CASE("subspace counts agree with brute force") {
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(subspace_count(2, n) == oracle::brute_subspace_count(2, n));
      CHECK(subspace_count(2, n, true) == oracle::brute_subspace_count(2, n, true));
    }
    for (std::size_t n = 1; n <= 2; ++n) {
      CHECK(subspace_count(3, n) == oracle::brute_subspace_count(3, n));
      CHECK(subspace_count(3, n, true) == oracle::brute_subspace_count(3, n, true));
    }
    CHECK(gaussian_binomial(2, 4, 2) == 35);
    CHECK(gaussian_binomial(3, 3, 1) == 13);
  }

  TEST_CASE("subspace stream is complete and duplicate free") {
    FieldSpec f = FieldSpec::prime(2);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto all = enumerate_subspaces(f, n);
      CHECK(all.size() == subspace_count(2, n));
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
      Element e = Element::basis(f, n, 0);
      auto with = enumerate_subspaces(f, n, e);
      CHECK(with.size() == subspace_count(2, n, true));
      for (const auto& s : with) CHECK(s.contains(e));
    }
    FieldSpec g = FieldSpec::prime(3);
    CHECK(enumerate_subspaces(g, 3).size() == subspace_count(3, 3));
  }

  TEST_CASE("exact length over small fields") {
    CHECK(exact_algebra_length(make_group_algebra_z2n(1)).length == 1);
    CHECK(exact_algebra_length(make_group_algebra_z2n(2)).length == 2);
    ExactLengthOptions o;
    o.threads = 3;
    CHECK(exact_algebra_length(make_group_algebra_z2n(2), o).length == 2);
    CHECK(exact_algebra_length(make_nil3(FieldSpec::prime(2))).length == 2);
    CHECK_THROWS_AS(exact_algebra_length(make_spin_factor(2)), Error);
    o.budget = 10;
    CHECK_THROWS_AS(exact_algebra_length(make_a_flex(), o), Error);
  }

  TEST_CASE("exact length is independent of the thread count") {
    Algebra a = make_a_alt();
    ExactLengthOptions one, many;
    many.threads = 4;
    ExactLength x = exact_algebra_length(a, one), y = exact_algebra_length(a, many);
    CHECK(x.length == y.length);
    CHECK(x.witness.elements == y.witness.elements);
    CHECK(x.subspaces_examined == y.subspaces_examined);
  }

  TEST_CASE("unity inference") {
    auto e = infer_unity(make_matrix_algebra(3));
    REQUIRE(e);
    CHECK(*e == *make_matrix_algebra(3).unity());
    CHECK_FALSE(infer_unity(make_a_flex()));
    Algebra hull = make_unital_hull(make_a_alt());
    CHECK(*infer_unity(hull) == *hull.unity());
  }

  TEST_CASE("mixing mode equals general mode where mixing holds") {
    for (const auto& a : small_examples()) {
      if (!check_mixing(a).holds()) continue;
      for (const auto& idx : small_sets(a.dim())) {
        GeneratorSet s = basis_generators(a, idx);
        SpanEngine g(a, s, SpanMode::general), m(a, s, SpanMode::mixing);
        for (std::size_t k = 1; k <= 5; ++k) {
          g.step();
          m.step();
          CHECK(g.span() == m.span());
        }
      }
    }
  }
}
