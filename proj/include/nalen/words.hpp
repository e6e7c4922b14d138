#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nalen/algebra.hpp"

namespace nalen {

// Immutable bracketed word over 0-based letter indices. Subtrees are shared.
class Word {
 public:
  static Word letter(std::size_t index);
  static Word product(const Word& left, const Word& right);

  bool is_letter() const { return node_->left == nullptr; }
  std::size_t letter_index() const { return node_->letter; }
  Word left() const { return Word(node_->left); }
  Word right() const { return Word(node_->right); }
  std::size_t length() const { return node_->length; }

  // letters left to right
  std::vector<std::size_t> letters() const;
  // swaps the factors of every product
  Word mirror() const;
  // 1-based: "((1 2) 3)"
  std::string to_string() const;
  // with generator names: "((a b) c)"
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Word& a, const Word& b);
  // shape first (left length, then recursively), then letters
  friend bool operator<(const Word& a, const Word& b);

 private:
  struct Node {
    std::size_t letter = 0;
    std::size_t length = 1;
    std::shared_ptr<const Node> left, right;
  };
  explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// "1", "(1 2)", "((1 2) 3)"; letters 1-based in the text
Word parse_word(std::string_view text);

struct GeneratorSet {
  std::vector<Element> elements;
  std::vector<std::string> labels;

  std::size_t size() const { return elements.size(); }
  bool has_duplicates() const;
  std::string name(std::size_t i) const;
};

GeneratorSet basis_generators(const Algebra& a, const std::vector<std::size_t>& indices);
GeneratorSet all_basis_generators(const Algebra& a);

Element evaluate(const Algebra& a, const GeneratorSet& s, const Word& w);

std::uint64_t catalan(std::size_t n);

// All words of length exactly m: bracket shapes in order, letters lexicographic per shape.
class FullWordStream {
 public:
  static constexpr std::uint64_t default_cap = 5'000'000;
  FullWordStream(std::size_t alphabet, std::size_t m, std::uint64_t cap = default_cap);
  std::optional<Word> next();
  std::uint64_t count() const { return count_; }

 private:
  std::vector<Word> shapes_;  // bracket shapes with placeholder letters
  std::size_t alphabet_, m_;
  std::size_t shape_ = 0;
  std::vector<std::size_t> letters_;
  bool done_ = false;
  std::uint64_t count_;
};

// Words X_1 ... X_{m-1} s_m with X_i in {L_s, R_s}. Chains differing only in the
// innermost step (L_a b versus R_b a) produce the same tree and are reported once.
class RestrictedWordStream {
 public:
  static constexpr std::uint64_t default_cap = 5'000'000;
  RestrictedWordStream(std::size_t alphabet, std::size_t m, std::uint64_t cap = default_cap);
  std::optional<Word> next();
  // distinct trees: S for m = 1, 2^{m-2} S^m for m >= 2
  std::uint64_t count() const { return count_; }

 private:
  std::size_t alphabet_, m_;
  std::uint64_t pattern_ = 0, patterns_ = 0;
  std::vector<std::size_t> letters_;
  bool done_ = false;
  std::uint64_t count_;
};

// 2^{m-1} S^m chain patterns before identification of the innermost step.
std::uint64_t restricted_pattern_count(std::size_t alphabet, std::size_t m);

std::vector<Word> enumerate_full(std::size_t alphabet, std::size_t m,
                                 std::uint64_t cap = FullWordStream::default_cap);
std::vector<Word> enumerate_restricted(std::size_t alphabet, std::size_t m,
                                       std::uint64_t cap = RestrictedWordStream::default_cap);

enum class Side { left, right };

// A restricted word read as a chain of one-letter multiplications.
struct Chain {
  struct Step {
    Side side;  // left: s * w, right: w * s
    std::size_t letter;
  };
  std::size_t base = 0;     // innermost letter
  std::vector<Step> steps;  // innermost first
};

// Reading that treats every product with a letter factor as a step; the innermost
// two-letter product (p q) is read as R_q applied to p.
std::optional<Chain> as_chain(const Word& w);
bool is_restricted(const Word& w);
Word chain_word(const Chain& c);

}  // namespace nalen
