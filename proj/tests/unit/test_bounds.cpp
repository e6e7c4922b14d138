#include <doctest.h>

#include <gmpxx.h>

#include "nalen/bounds.hpp"
#include "nalen/examples.hpp"

using namespace nalen;

namespace {

std::uint64_t ceil_log2_exact(std::uint64_t d) {
  mpz_class p = 1, target = static_cast<unsigned long>(d);
  std::uint64_t n = 0;
  while (p < target) p *= 2, ++n;
  return n;
}

std::uint64_t flex_inverse_scan(std::uint64_t d) {
  std::uint64_t best = 0;
  for (std::uint64_t n = 1; n < 64; ++n)
    if (flex_min_dim(n) <= d) best = n;
  return best;
}

LengthData basis_pair(const Algebra& a, std::size_t algebra_length) {
  LengthData data;
  GeneratorSet s = basis_generators(a, {0, 1});
  data.sets.push_back({"{1,2}", s, diff_sequence(a, s, SpanMode::general)});
  data.algebra_length = algebra_length;
  return data;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("two-block dimension bound") {
    CHECK(alt_min_dim(2) == 2);
    CHECK(alt_min_dim(3) == 5);
    CHECK(alt_min_dim(4) == 10);
    CHECK(alt_min_dim(5) == 19);
    CHECK_THROWS_AS(alt_min_dim(1), Error);
  }

  TEST_CASE("two-block length bound against exact logarithm") {
    CHECK(alt_max_length(3) == 2);
    CHECK(alt_max_length(4) == 2);
    CHECK(alt_max_length(5) == 3);
    CHECK(alt_max_length(9) == 4);
    for (std::uint64_t d = 3; d <= 1'000'000; d += (d < 5000 ? 1 : 997)) REQUIRE(alt_max_length(d) == ceil_log2_exact(d));
    CHECK(alt_max_length(std::uint64_t{1} << 40) == 40);
    CHECK(alt_max_length((std::uint64_t{1} << 40) + 1) == 41);
    CHECK_THROWS_AS(alt_max_length(2), Error);
  }

  TEST_CASE("three-block dimension bound") {
    std::vector<std::uint64_t> expect{1, 2, 5, 7, 9, 15, 28, 53};
    for (std::uint64_t n = 1; n <= expect.size(); ++n) CHECK(flex_min_dim(n) == expect[n - 1]);
    for (std::uint64_t n = 1; n < 40; ++n) CHECK(flex_min_dim(n) < flex_min_dim(n + 1));
  }

  TEST_CASE("three-block length bounds") {
    CHECK(flex_max_length(5) == 3);
    CHECK(flex_max_length(10) == 5);
    CHECK(flex_max_length(12) == 5);
    CHECK(flex_max_length(13) == 6);
    for (std::uint64_t d = 3; d <= 5000; ++d) {
      CHECK(flex_max_length_inverse(d) == flex_inverse_scan(d));
      CHECK(flex_max_length_inverse(d) <= flex_max_length(d));
      CHECK(flex_max_length(d) <= flex_max_length(d + 1));
    }
    CHECK(flex_max_length_inverse(5) == 3);
    CHECK(flex_max_length_inverse(15) == 6);
  }

  TEST_CASE("quick and word bounds") {
    CHECK(quick_set_bound(0, BoundClass::alt) == 0);
    CHECK(quick_set_bound(0, BoundClass::flex) == 0);
    CHECK(quick_set_bound(3, BoundClass::alt) == 6);
    CHECK(quick_set_bound(3, BoundClass::flex) == 8);
    CHECK(alt_word_dim_bound(3, 1) == 5);
    CHECK(alt_word_dim_bound(4, 2) == 11);
    CHECK(alt_word_dim_bound(4, 1) == alt_word_dim_bound(4, 3));
    CHECK_THROWS_AS(alt_word_dim_bound(3, 0), Error);
    CHECK_THROWS_AS(alt_word_dim_bound(3, 3), Error);
  }

  TEST_CASE("audit of the separating tables is tight") {
    for (bool flex : {true, false}) {
      Algebra a = flex ? make_a_flex() : make_a_alt();
      ClassificationReport r = classify(a);
      BoundReport b = audit(a, r, basis_pair(a, 3));
      CHECK(b.passed());
      bool tight = false;
      for (const auto& e : b.entries) {
        CHECK_MESSAGE(e.pass, e.name << " " << e.subject << " " << e.observed);
        if (e.name == (flex ? "flex_min_dim" : "alt_min_dim") && e.subject == "A") tight = tight || e.equality;
      }
      CHECK(tight);
    }
  }

  TEST_CASE("audit reports a violation when fed an impossible length") {
    Algebra a = make_a_flex();
    ClassificationReport r = classify(a);
    LengthData data = basis_pair(a, 4);
    BoundReport b = audit(a, r, data);
    CHECK(!b.passed());
  }
}
