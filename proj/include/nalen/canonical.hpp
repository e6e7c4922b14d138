#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nalen/spans.hpp"
#include "nalen/words.hpp"

namespace nalen {

enum class CanonicalVariant { alt_two_block, flex_three_block };
enum class FlexShape { EOO, OEE, O11, OO, OE };

const char* to_string(CanonicalVariant v);
const char* to_string(FlexShape s);

// A left swapping block has its outermost multiplication on the left (L_s ...),
// a right swapping block on the right. Two-letter blocks can be read either way.
struct Block {
  std::string name;
  Word word = Word::letter(0);
  Side type = Side::left;

  std::size_t length() const { return word.length(); }
  std::size_t inner_letter() const;
  std::vector<std::size_t> outer_letters() const;  // outermost first
};

struct LetterSlot {
  std::size_t letter = 0;
  std::string block;
  bool inner = false;
};

struct CanonicalWord {
  CanonicalVariant variant = CanonicalVariant::alt_two_block;
  int sign = 1;
  Word word = Word::letter(0);

  // two-block form ((x_1 x_2) ... x_k)(y_{m-k} (... (y_2 y_1)))
  std::vector<std::size_t> x_letters;  // x_1 .. x_k
  std::vector<std::size_t> y_letters;  // y_1 .. y_{m-k}

  // three-block form (xy)z or z(yx); OO and OE are stored as two blocks u, v
  std::optional<FlexShape> shape;
  bool mirrored = false;  // z(yx) rather than (xy)z
  std::vector<Block> blocks;

  std::vector<std::vector<LetterSlot>> partition;

  std::size_t largest_class() const;
};

CanonicalWord canonical_alt_form(const Word& w);

// (xy)z or z'(y'x') before shape normalization
struct ThreeBlock {
  bool mirrored = false;
  Block x, y, z;
  int sign = 1;
  Word word() const;
};

ThreeBlock flex_three_block(const Word& w);
CanonicalWord canonical_flex_form(const Word& w);

// Lin_k(S) for increasing k, computed on demand
class LevelSpans {
 public:
  LevelSpans(const Algebra& a, const GeneratorSet& s);
  const SpanBasis& lin(std::size_t k);
  const Algebra& algebra() const { return a_; }
  const GeneratorSet& generators() const { return s_; }

 private:
  const Algebra& a_;
  GeneratorSet s_;
  SpanEngine engine_;
  std::vector<SpanBasis> levels_;
};

// w - sign * c.word lies in Lin_{m-1}(S)
bool verify_equivalence(const Algebra& a, const GeneratorSet& s, const Word& w, const CanonicalWord& c);
bool verify_equivalence(LevelSpans& spans, const Word& w, const CanonicalWord& c);

struct SubwordIndexPair {
  std::vector<std::size_t> i;  // nonempty subset of 1..k
  std::vector<std::size_t> j;  // nonempty subset of 1..m-k
};

std::uint64_t alt_subword_count(std::size_t k, std::size_t m);
std::vector<SubwordIndexPair> alt_subword_family(std::size_t k, std::size_t m);

}  // namespace nalen
