#include "nalen/words.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace nalen {

Word Word::letter(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->letter = index;
  return Word(std::move(n));
}

Word Word::product(const Word& left, const Word& right) {
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->length = left.length() + right.length();
  return Word(std::move(n));
}

std::vector<std::size_t> Word::letters() const {
  std::vector<std::size_t> out;
  std::function<void(const Node*)> walk = [&](const Node* n) {
    if (!n->left) {
      out.push_back(n->letter);
      return;
    }
    walk(n->left.get());
    walk(n->right.get());
  };
  walk(node_.get());
  return out;
}

Word Word::mirror() const {
  if (is_letter()) return *this;
  return product(right().mirror(), left().mirror());
}

std::string Word::to_string() const {
  if (is_letter()) return std::to_string(letter_index() + 1);
  return "(" + left().to_string() + " " + right().to_string() + ")";
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (is_letter()) {
    std::size_t i = letter_index();
    return i < names.size() ? names[i] : std::to_string(i + 1);
  }
  return "(" + left().to_string(names) + " " + right().to_string(names) + ")";
}

bool operator==(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return true;
  if (a.length() != b.length() || a.is_letter() != b.is_letter()) return false;
  if (a.is_letter()) return a.letter_index() == b.letter_index();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

// shape comparison ignoring letters
int compare_shape(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  if (a.is_letter()) return 0;
  if (int c = compare_shape(a.left(), b.left())) return c;
  return compare_shape(a.right(), b.right());
}

}  // namespace

bool operator<(const Word& a, const Word& b) {
  if (int c = compare_shape(a, b)) return c < 0;
  return a.letters() < b.letters();
}

Word parse_word(std::string_view text) {
  std::size_t pos = 0;
  auto error = [&](const std::string& msg) -> Word {
    fail(ErrorCode::parse_error, "word '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + msg);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::function<Word()> parse = [&]() -> Word {
    skip();
    if (pos >= text.size()) return error("unexpected end");
    if (text[pos] == '(') {
      ++pos;
      Word l = parse();
      Word r = parse();
      skip();
      if (pos >= text.size() || text[pos] != ')') return error("expected ')'");
      ++pos;
      return Word::product(l, r);
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) return error("expected a letter index or '('");
    std::size_t v = std::stoull(std::string(text.substr(start, pos - start)));
    if (v == 0) return error("letter indices are 1-based");
    return Word::letter(v - 1);
  };
  Word w = parse();
  skip();
  if (pos != text.size()) return error("trailing characters");
  return w;
}

bool GeneratorSet::has_duplicates() const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (elements[i] == elements[j]) return true;
  return false;
}

std::string GeneratorSet::name(std::size_t i) const {
  return i < labels.size() ? labels[i] : "s" + std::to_string(i + 1);
}

GeneratorSet basis_generators(const Algebra& a, const std::vector<std::size_t>& indices) {
  GeneratorSet s;
  for (std::size_t i : indices) {
    if (i >= a.dim()) fail(ErrorCode::index_out_of_range, "basis index " + std::to_string(i + 1));
    s.elements.push_back(a.basis(i));
    s.labels.push_back(a.label(i));
  }
  return s;
}

GeneratorSet all_basis_generators(const Algebra& a) {
  std::vector<std::size_t> idx(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) idx[i] = i;
  return basis_generators(a, idx);
}

Element evaluate(const Algebra& a, const GeneratorSet& s, const Word& w) {
  if (w.is_letter()) {
    if (w.letter_index() >= s.size())
      fail(ErrorCode::index_out_of_range, "letter " + std::to_string(w.letter_index() + 1) + " but only " +
                                              std::to_string(s.size()) + " generators");
    return s.elements[w.letter_index()];
  }
  return a.multiply(evaluate(a, s, w.left()), evaluate(a, s, w.right()));
}

std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  unsigned __int128 r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= base;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  return r > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

std::vector<Word> shapes_of(std::size_t m) {
  if (m == 1) return {Word::letter(0)};
  std::vector<Word> out;
  for (std::size_t a = 1; a < m; ++a)
    for (const auto& l : shapes_of(a))
      for (const auto& r : shapes_of(m - a)) out.push_back(Word::product(l, r));
  return out;
}

Word relabel(const Word& shape, const std::vector<std::size_t>& letters, std::size_t& pos) {
  if (shape.is_letter()) return Word::letter(letters[pos++]);
  Word l = relabel(shape.left(), letters, pos);
  Word r = relabel(shape.right(), letters, pos);
  return Word::product(l, r);
}

// odometer over alphabet^n, last position fastest; false when wrapped around
bool advance(std::vector<std::size_t>& v, std::size_t alphabet) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < alphabet) return true;
    v[i] = 0;
  }
  return false;
}

}  // namespace

FullWordStream::FullWordStream(std::size_t alphabet, std::size_t m, std::uint64_t cap)
    : alphabet_(alphabet), m_(m), letters_(m, 0) {
  if (m == 0) fail(ErrorCode::domain_error, "word length must be at least 1");
  count_ = saturating_mul(catalan(m - 1), saturating_pow(alphabet, m));
  if (count_ > cap)
    fail(ErrorCode::resource_limit, "full enumeration of length " + std::to_string(m) + " has " +
                                        std::to_string(count_) + " words, cap " + std::to_string(cap));
  shapes_ = shapes_of(m);
  done_ = alphabet == 0;
}

std::optional<Word> FullWordStream::next() {
  if (done_) return std::nullopt;
  std::size_t pos = 0;
  Word w = relabel(shapes_[shape_], letters_, pos);
  if (!advance(letters_, alphabet_)) {
    if (++shape_ == shapes_.size()) done_ = true;
  }
  return w;
}

std::uint64_t restricted_pattern_count(std::size_t alphabet, std::size_t m) {
  if (m == 0) return 0;
  return saturating_mul(saturating_pow(2, m - 1), saturating_pow(alphabet, m));
}

RestrictedWordStream::RestrictedWordStream(std::size_t alphabet, std::size_t m, std::uint64_t cap)
    : alphabet_(alphabet), m_(m), letters_(m, 0) {
  if (m == 0) fail(ErrorCode::domain_error, "word length must be at least 1");
  patterns_ = m >= 2 ? (std::uint64_t{1} << (m - 2)) : 1;
  count_ = saturating_mul(patterns_, saturating_pow(alphabet, m));
  if (count_ > cap)
    fail(ErrorCode::resource_limit, "restricted enumeration of length " + std::to_string(m) + " has " +
                                        std::to_string(count_) + " words, cap " + std::to_string(cap));
  done_ = alphabet == 0;
}

std::optional<Word> RestrictedWordStream::next() {
  if (done_) return std::nullopt;
  // letters_[0] is the outermost step letter, letters_[m-1] the innermost letter.
  // Pattern bit i (0 = outermost) selects L (1) or R (0); the innermost step is always R.
  Word w = Word::letter(letters_[m_ - 1]);
  for (std::size_t step = m_ - 1; step-- > 0;) {
    Word s = Word::letter(letters_[step]);
    bool left = step + 1 < m_ - 1 && ((pattern_ >> step) & 1);
    w = left ? Word::product(s, w) : Word::product(w, s);
  }
  if (!advance(letters_, alphabet_)) {
    if (++pattern_ == patterns_) done_ = true;
  }
  return w;
}

std::vector<Word> enumerate_full(std::size_t alphabet, std::size_t m, std::uint64_t cap) {
  FullWordStream s(alphabet, m, cap);
  std::vector<Word> out;
  while (auto w = s.next()) out.push_back(*w);
  return out;
}

std::vector<Word> enumerate_restricted(std::size_t alphabet, std::size_t m, std::uint64_t cap) {
  RestrictedWordStream s(alphabet, m, cap);
  std::vector<Word> out;
  while (auto w = s.next()) out.push_back(*w);
  return out;
}

std::optional<Chain> as_chain(const Word& w) {
  Chain c;
  Word cur = w;
  while (!cur.is_letter()) {
    if (cur.right().is_letter()) {
      c.steps.push_back({Side::right, cur.right().letter_index()});
      cur = cur.left();
    } else if (cur.left().is_letter()) {
      c.steps.push_back({Side::left, cur.left().letter_index()});
      cur = cur.right();
    } else {
      return std::nullopt;
    }
  }
  c.base = cur.letter_index();
  std::reverse(c.steps.begin(), c.steps.end());
  return c;
}

bool is_restricted(const Word& w) { return as_chain(w).has_value(); }

Word chain_word(const Chain& c) {
  Word w = Word::letter(c.base);
  for (const auto& s : c.steps) {
    Word l = Word::letter(s.letter);
    w = s.side == Side::left ? Word::product(l, w) : Word::product(w, l);
  }
  return w;
}

}  // namespace nalen
