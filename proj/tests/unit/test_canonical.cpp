#include <doctest.h>

#include <set>

#include "nalen/canonical.hpp"
#include "nalen/examples.hpp"
#include "support/oracles.hpp"

using namespace nalen;

namespace {

Word swap_letters(const Word& w, std::size_t p, std::size_t q) {
  if (w.is_letter()) {
    std::size_t l = w.letter_index();
    return Word::letter(l == p ? q : l == q ? p : l);
  }
  return Word::product(swap_letters(w.left(), p, q), swap_letters(w.right(), p, q));
}

std::vector<Word> multilinear_restricted(std::size_t m) {
  std::vector<Word> out;
  for (const auto& w : enumerate_restricted(m, m)) {
    auto l = w.letters();
    if (std::set<std::size_t>(l.begin(), l.end()).size() == m) out.push_back(w);
  }
  return out;
}

void check_against_quotient(oracle::FreeQuotient::Kind kind, std::size_t m) {
  oracle::FreeQuotient fq(kind, m);
  std::size_t checked = 0;
  for (const auto& w : multilinear_restricted(m)) {
    CanonicalWord c = kind == oracle::FreeQuotient::Kind::alt ? canonical_alt_form(w) : canonical_flex_form(w);
    auto rel = fq.relation(w, c.word);
    REQUIRE_MESSAGE(rel.has_value(), w.to_string() << " unrelated to " << c.word.to_string());
    if (*rel != 0) CHECK_MESSAGE(*rel == c.sign, w.to_string() << " -> " << c.word.to_string());
    std::size_t total = 0;
    for (const auto& cls : c.partition) {
      total += cls.size();
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          Word swapped = swap_letters(c.word, cls[i].letter, cls[j].letter);
          CHECK_MESSAGE(fq.relation(swapped, c.word).has_value(),
                        c.word.to_string() << " letters " << cls[i].letter + 1 << ", " << cls[j].letter + 1);
        }
    }
    CHECK(total == m);
    ++checked;
  }
  CHECK(checked > 0);
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("two-block form of short words") {
    CanonicalWord c = canonical_alt_form(parse_word("((1 2) 3)"));
    CHECK(c.x_letters == std::vector<std::size_t>{0, 1});
    CHECK(c.y_letters == std::vector<std::size_t>{2});
    CHECK(c.sign == 1);
    c = canonical_alt_form(parse_word("(3 (1 2))"));
    CHECK(c.x_letters == std::vector<std::size_t>{2});
    CHECK(c.y_letters == std::vector<std::size_t>{1, 0});
    c = canonical_alt_form(parse_word("(4 ((1 2) 3))"));
    CHECK(c.sign == -1);
    CHECK(c.word.to_string() == "((1 2) (4 3))");
    REQUIRE(c.partition.size() == 2);
    CHECK(c.partition[0].size() + c.partition[1].size() == 4);
  }

  TEST_CASE("errors") {
    try {
      canonical_alt_form(parse_word("1"));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::word_too_short);
    }
    try {
      canonical_flex_form(parse_word("(1 2)"));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::word_too_short);
    }
    try {
      canonical_alt_form(parse_word("((1 2) (3 4))"));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_restricted_form);
    }
  }

  TEST_CASE("two-block rewrites agree with the free quotient") {
    for (std::size_t m = 2; m <= 6; ++m) check_against_quotient(oracle::FreeQuotient::Kind::alt, m);
  }

  TEST_CASE("three-block rewrites agree with the free quotient") {
    for (std::size_t m = 3; m <= 6; ++m) check_against_quotient(oracle::FreeQuotient::Kind::flex, m);
  }

  TEST_CASE("flex shapes match block parities") {
    std::set<FlexShape> seen;
    for (std::size_t m = 3; m <= 7; ++m)
      for (const auto& w : enumerate_restricted(2, m)) {
        CanonicalWord c = canonical_flex_form(w);
        REQUIRE(c.shape);
        seen.insert(*c.shape);
        CHECK(c.word.length() == m);
        if (c.blocks.size() == 3) {
          std::size_t j = c.blocks[0].length(), k = c.blocks[1].length(), l = c.blocks[2].length();
          CHECK(j + k + l == m);
          switch (*c.shape) {
            case FlexShape::EOO: CHECK((j % 2 == 0 && k % 2 == 1 && l % 2 == 1)); break;
            case FlexShape::OEE: CHECK((j % 2 == 1 && k % 2 == 0 && l % 2 == 0)); break;
            case FlexShape::O11: CHECK((j % 2 == 1 && k == 1 && l == 1)); break;
            default: FAIL("two-block shape with three blocks");
          }
        } else {
          REQUIRE(c.blocks.size() == 2);
          CHECK((*c.shape == FlexShape::OO || *c.shape == FlexShape::OE));
        }
        CHECK(c.largest_class() >= m / 3 + 1);
      }
    CHECK(seen.size() == 5);
  }

  TEST_CASE("rewrites hold in the separating tables") {
    Algebra alt = make_a_alt(), flex = make_a_flex();
    GeneratorSet sa = basis_generators(alt, {0, 1}), sf = basis_generators(flex, {0, 1});
    LevelSpans la(alt, sa), lf(flex, sf);
    for (std::size_t m = 2; m <= 6; ++m)
      for (const auto& w : enumerate_restricted(2, m)) {
        CHECK(verify_equivalence(la, w, canonical_alt_form(w)));
        if (m >= 3) CHECK(verify_equivalence(lf, w, canonical_flex_form(w)));
      }
  }

  TEST_CASE("subword families") {
    CHECK(alt_subword_count(1, 3) == 3);
    CHECK(alt_subword_count(2, 4) == 9);
    auto fam = alt_subword_family(2, 5);
    CHECK(fam.size() == 3 * 7);
    for (const auto& p : fam) {
      CHECK(!p.i.empty());
      CHECK(!p.j.empty());
      CHECK(p.i.back() <= 2);
      CHECK(p.j.back() <= 3);
    }
    CHECK_THROWS_AS(alt_subword_count(0, 3), Error);
  }
}
