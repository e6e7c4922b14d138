#include "nalen/canonical.hpp"

#include <algorithm>

namespace nalen {

const char* to_string(CanonicalVariant v) {
  return v == CanonicalVariant::alt_two_block ? "alt-two-block" : "flex-three-block";
}

const char* to_string(FlexShape s) {
  switch (s) {
    case FlexShape::EOO: return "EOO";
    case FlexShape::OEE: return "OEE";
    case FlexShape::O11: return "O11";
    case FlexShape::OO: return "OO";
    case FlexShape::OE: return "OE";
  }
  return "?";
}

namespace {

Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }

[[noreturn]] void broken(const std::string& what) {
  fail(ErrorCode::internal_consistency, "canonical form: " + what);
}

std::size_t letter_of(const Word& w) {
  if (!w.is_letter()) broken("expected a single letter");
  return w.letter_index();
}

Word L(std::size_t s, const Word& w) { return Word::product(Word::letter(s), w); }
Word R(const Word& w, std::size_t s) { return Word::product(w, Word::letter(s)); }

Chain restricted_chain(const Word& w) {
  auto c = as_chain(w);
  if (!c) fail(ErrorCode::not_restricted_form, "word " + w.to_string() + " is not built one letter at a time");
  return *c;
}

}  // namespace

std::size_t Block::inner_letter() const {
  Word cur = word;
  Side side = type;
  while (!cur.is_letter()) {
    cur = side == Side::right ? cur.left() : cur.right();
    side = flip(side);
  }
  return cur.letter_index();
}

std::vector<std::size_t> Block::outer_letters() const {
  std::vector<std::size_t> out;
  Word cur = word;
  Side side = type;
  while (!cur.is_letter()) {
    if (side == Side::right) {
      out.push_back(letter_of(cur.right()));
      cur = cur.left();
    } else {
      out.push_back(letter_of(cur.left()));
      cur = cur.right();
    }
    side = flip(side);
  }
  return out;
}

std::size_t CanonicalWord::largest_class() const {
  std::size_t best = 0;
  for (const auto& c : partition) best = std::max(best, c.size());
  return best;
}

CanonicalWord canonical_alt_form(const Word& w) {
  const std::size_t m = w.length();
  if (m < 2) fail(ErrorCode::word_too_short, "two-block form needs a word of length at least 2");
  Chain c = restricted_chain(w);
  CanonicalWord out;
  out.variant = CanonicalVariant::alt_two_block;
  std::vector<std::size_t>& x = out.x_letters;
  std::vector<std::size_t>& y = out.y_letters;
  std::size_t first = 1;
  if (m == 2) {
    x = {c.base};
    y = {c.steps[0].letter};
  } else {
    // the innermost three letters already have the form x y
    std::size_t p = c.base, q = c.steps[0].letter, r = c.steps[1].letter;
    if (c.steps[1].side == Side::right) {
      x = {p, q};
      y = {r};
    } else {
      x = {r};
      y = {q, p};
    }
    first = 2;
  }
  // (xy)s ~ -(xs)y and s(xy) ~ -x(sy)
  for (std::size_t i = first; i < c.steps.size(); ++i) {
    (c.steps[i].side == Side::right ? x : y).push_back(c.steps[i].letter);
    out.sign = -out.sign;
  }
  Word xw = Word::letter(x[0]);
  for (std::size_t i = 1; i < x.size(); ++i) xw = R(xw, x[i]);
  Word yw = Word::letter(y[0]);
  for (std::size_t i = 1; i < y.size(); ++i) yw = L(y[i], yw);
  out.word = Word::product(xw, yw);

  std::vector<LetterSlot> first_class{{y[0], "y", true}}, second_class{{x[0], "x", true}};
  for (std::size_t i = 1; i < x.size(); ++i) first_class.push_back({x[i], "x", false});
  for (std::size_t i = 1; i < y.size(); ++i) second_class.push_back({y[i], "y", false});
  out.partition = {first_class, second_class};
  return out;
}

namespace {

Block block(std::string name, Word w, Side type) { return Block{std::move(name), std::move(w), type}; }

Block mirror(const Block& b) { return block(b.name, b.word.mirror(), flip(b.type)); }

ThreeBlock mirror(const ThreeBlock& t) {
  ThreeBlock r;
  r.mirrored = !t.mirrored;
  r.x = mirror(t.x);
  r.y = mirror(t.y);
  r.z = mirror(t.z);
  r.sign = t.sign;
  return r;
}

// (xy)z with x left swapping, y and z right swapping
ThreeBlock form1(Word x, Word y, Word z, int sign) {
  ThreeBlock t;
  t.x = block("x", std::move(x), Side::left);
  t.y = block("y", std::move(y), Side::right);
  t.z = block("z", std::move(z), Side::right);
  t.sign = sign;
  return t;
}

// z(yx) with x right swapping, y and z left swapping
ThreeBlock form2(Word z, Word y, Word x, int sign) {
  ThreeBlock t;
  t.mirrored = true;
  t.x = block("x", std::move(x), Side::right);
  t.y = block("y", std::move(y), Side::left);
  t.z = block("z", std::move(z), Side::left);
  t.sign = sign;
  return t;
}

// ws and sw for a three-block word: ((xy)z)s ~ -(sz)(xy), s((xy)z) ~ -x((sy)z)
ThreeBlock add_letter(const ThreeBlock& t, Side side, std::size_t s) {
  if (t.mirrored) return mirror(add_letter(mirror(t), flip(side), s));
  if (side == Side::right) return form2(L(s, t.z.word), t.x.word, t.y.word, -t.sign);
  return form2(t.x.word, L(s, t.y.word), t.z.word, -t.sign);
}

struct PulledPair {
  bool from_y;
  std::size_t inner, outer;  // the block was ((inner B) outer)
};

// splits a right swapping block ((a B) b) of length >= 3
void split_pair(const Block& b, std::size_t& a, Word& rest, std::size_t& outer) {
  outer = letter_of(b.word.right());
  Word l = b.word.left();
  a = letter_of(l.left());
  rest = l.right();
}

// (X((aY)b))Z ~ a((XY)Z)b and (XY)((cZ)d) ~ d((XY)Z)c, read backwards
ThreeBlock push_pair(const ThreeBlock& t, const PulledPair& p) {
  ThreeBlock r = t;
  Word inner_letter = Word::letter(p.inner), outer_letter = Word::letter(p.outer);
  if (!t.mirrored) {
    Block& target = p.from_y ? r.y : r.z;
    target.word = Word::product(Word::product(inner_letter, target.word), outer_letter);
  } else {
    Block& target = p.from_y ? r.z : r.y;
    target.word = Word::product(outer_letter, Word::product(target.word, inner_letter));
  }
  return r;
}

ThreeBlock normalize(ThreeBlock t) {
  if (t.mirrored) return mirror(normalize(mirror(t)));
  std::vector<PulledPair> pulled;
  while (t.y.length() >= 3) {
    PulledPair p{true, 0, 0};
    Word rest = t.y.word;
    split_pair(t.y, p.inner, rest, p.outer);
    t.y.word = rest;
    pulled.push_back(p);
  }
  while (t.z.length() >= 3) {
    PulledPair p{false, 0, 0};
    Word rest = t.z.word;
    split_pair(t.z, p.inner, rest, p.outer);
    t.z.word = rest;
    pulled.push_back(p);
  }
  const std::size_t ly = t.y.length(), lz = t.z.length();
  ThreeBlock inner;
  if (ly == 1 && lz == 1) {
    inner = t;
  } else if (ly == 1 && lz == 2) {
    // (xy)(pq) ~ -q(p(xy))
    std::size_t p = letter_of(t.z.word.left()), q = letter_of(t.z.word.right());
    inner = normalize(form2(Word::letter(q), Word::letter(p), Word::product(t.x.word, t.y.word), -t.sign));
  } else if (ly == 2 && lz == 1) {
    if (t.x.length() == 1) {
      inner = t;
    } else {
      // ((x1 X)y)z ~ -(zy)(x1 X)
      std::size_t x1 = letter_of(t.x.word.left());
      inner = normalize(form2(Word::product(t.z.word, t.y.word), Word::letter(x1), t.x.word.right(), -t.sign));
    }
  } else {
    // (xy)(rt) ~ -(xr)(yt)
    std::size_t r = letter_of(t.z.word.left()), tt = letter_of(t.z.word.right());
    inner = normalize(form1(t.x.word, Word::letter(r), R(t.y.word, tt), -t.sign));
  }
  for (auto it = pulled.rbegin(); it != pulled.rend(); ++it) inner = push_pair(inner, *it);
  return inner;
}

bool odd(std::size_t n) { return n % 2 == 1; }

std::optional<FlexShape> shape_of(const ThreeBlock& t) {
  std::size_t x = t.x.length(), y = t.y.length(), z = t.z.length();
  if (odd(x) && y == 1 && z == 1) return FlexShape::O11;
  if (!odd(x) && odd(y) && odd(z)) return FlexShape::EOO;
  if (odd(x) && !odd(y) && !odd(z)) return FlexShape::OEE;
  if (x == 1 && !odd(y) && odd(z)) return FlexShape::OO;
  if (odd(x) && odd(y) && y >= 3 && z == 1) return FlexShape::OE;
  return std::nullopt;
}

// an OO word uv followed by a literal multiplication by s
ThreeBlock push_literal(const ThreeBlock& t, Side side, std::size_t s) {
  if (t.mirrored) return mirror(push_literal(mirror(t), flip(side), s));
  Word u = Word::product(t.x.word, t.y.word);
  if (side == Side::right) return form1(u, t.z.word, Word::letter(s), t.sign);
  return form2(Word::letter(s), u, t.z.word, t.sign);
}

// x, y, z all odd with y or z longer than 1: pull one letter, normalize, push it back
ThreeBlock resolve_odd(const ThreeBlock& t) {
  if (t.mirrored) return mirror(resolve_odd(mirror(t)));
  ThreeBlock inner;
  Side side;
  std::size_t s;
  if (t.y.length() >= 3) {
    // (x(y' s))z ~ -(x(y' z))s
    s = letter_of(t.y.word.right());
    inner = form2(t.x.word, t.y.word.left(), t.z.word, -t.sign);
    side = Side::right;
  } else {
    // (xy)(z' s) ~ -s(z'(xy))
    s = letter_of(t.z.word.right());
    inner = form2(t.z.word.left(), t.x.word, t.y.word, -t.sign);
    side = Side::left;
  }
  inner = normalize(inner);
  auto sh = shape_of(inner);
  if (sh == FlexShape::EOO) return add_letter(inner, side, s);
  if (sh == FlexShape::OO) return push_literal(inner, side, s);
  broken("even-length word normalized to an unexpected shape");
}

void check_block(const Block& b) {
  // walking the block must meet a letter on the expected side at every step
  b.outer_letters();
}

}  // namespace

Word ThreeBlock::word() const {
  if (!mirrored) return Word::product(Word::product(x.word, y.word), z.word);
  return Word::product(z.word, Word::product(y.word, x.word));
}

ThreeBlock flex_three_block(const Word& w) {
  const std::size_t m = w.length();
  if (m < 3) fail(ErrorCode::word_too_short, "three-block form needs a word of length at least 3");
  Chain c = restricted_chain(w);
  std::size_t p = c.base, q = c.steps[0].letter, r = c.steps[1].letter;
  ThreeBlock t = c.steps[1].side == Side::right
                     ? form1(Word::letter(p), Word::letter(q), Word::letter(r), 1)
                     : form2(Word::letter(r), Word::letter(p), Word::letter(q), 1);
  for (std::size_t i = 2; i < c.steps.size(); ++i) t = add_letter(t, c.steps[i].side, c.steps[i].letter);
  return t;
}

CanonicalWord canonical_flex_form(const Word& w) {
  const std::size_t m = w.length();
  ThreeBlock t = normalize(flex_three_block(w));
  if (odd(t.x.length()) && odd(t.y.length()) && odd(t.z.length()) && !(t.y.length() == 1 && t.z.length() == 1))
    t = resolve_odd(t);
  auto sh = shape_of(t);
  if (!sh) broken("no shape for block lengths " + std::to_string(t.x.length()) + ", " + std::to_string(t.y.length()) +
                  ", " + std::to_string(t.z.length()));
  check_block(t.x);
  check_block(t.y);
  check_block(t.z);

  CanonicalWord out;
  out.variant = CanonicalVariant::flex_three_block;
  out.shape = *sh;
  out.mirrored = t.mirrored;
  out.sign = t.sign;

  auto add = [](std::vector<LetterSlot>& cls, const Block& b, bool outer_part) {
    if (outer_part) {
      for (std::size_t l : b.outer_letters()) cls.push_back({l, b.name, false});
    } else {
      cls.push_back({b.inner_letter(), b.name, true});
    }
  };

  if (*sh == FlexShape::OO || *sh == FlexShape::OE) {
    Block u, v;
    if (*sh == FlexShape::OO) {
      // uv = (xy)z or z'(y'x')
      if (!t.mirrored) {
        u = block("u", Word::product(t.x.word, t.y.word), Side::left);
        v = block("v", t.z.word, Side::right);
      } else {
        u = block("u", t.z.word, Side::left);
        v = block("v", Word::product(t.y.word, t.x.word), Side::right);
      }
      out.word = Word::product(u.word, v.word);
    } else {
      // (xy)z ~ -(zy)x and z'(y'x') ~ -x'(y'z')
      if (!t.mirrored) {
        u = block("u", Word::product(t.z.word, t.y.word), Side::left);
        v = block("v", t.x.word, Side::left);
        out.word = Word::product(u.word, v.word);
      } else {
        u = block("u", Word::product(t.y.word, t.z.word), Side::right);
        v = block("v", t.x.word, Side::right);
        out.word = Word::product(v.word, u.word);
      }
      out.sign = -out.sign;
    }
    check_block(u);
    check_block(v);
    out.blocks = {u, v};
    std::vector<LetterSlot> one, two;
    add(one, u, true);
    add(one, v, false);
    add(two, v, true);
    add(two, u, false);
    out.partition = {one, two};
  } else {
    out.word = t.word();
    out.blocks = {t.x, t.y, t.z};
    std::vector<LetterSlot> one, two, three;
    if (*sh == FlexShape::OEE) {
      add(one, t.x, false);
      add(one, t.y, true);
      add(two, t.y, false);
      add(two, t.z, true);
      add(three, t.z, false);
      add(three, t.x, true);
    } else {
      add(one, t.x, false);
      add(one, t.z, true);
      add(two, t.x, true);
      add(two, t.y, false);
      add(three, t.y, true);
      add(three, t.z, false);
    }
    if (m == 3) {
      // x and z of (xy)z or z(yx) are swappable directly
      one.insert(one.end(), three.begin(), three.end());
      out.partition = {one, two};
    } else {
      out.partition = {one, two, three};
    }
  }
  if (out.word.length() != m) broken("length changed");
  std::vector<std::size_t> before = w.letters(), after = out.word.letters();
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  if (before != after) broken("letters changed");
  return out;
}

LevelSpans::LevelSpans(const Algebra& a, const GeneratorSet& s)
    : a_(a), s_(s), engine_(a, s_, SpanMode::general) {
  levels_.push_back(engine_.span());
}

const SpanBasis& LevelSpans::lin(std::size_t k) {
  while (levels_.size() <= k) {
    engine_.step();
    levels_.push_back(engine_.span());
  }
  return levels_[k];
}

bool verify_equivalence(LevelSpans& spans, const Word& w, const CanonicalWord& c) {
  const Algebra& a = spans.algebra();
  const GeneratorSet& s = spans.generators();
  Element lhs = evaluate(a, s, w);
  Element rhs = evaluate(a, s, c.word);
  if (c.sign < 0) rhs = -rhs;
  return spans.lin(w.length() - 1).contains(lhs - rhs);
}

bool verify_equivalence(const Algebra& a, const GeneratorSet& s, const Word& w, const CanonicalWord& c) {
  LevelSpans spans(a, s);
  return verify_equivalence(spans, w, c);
}

std::uint64_t alt_subword_count(std::size_t k, std::size_t m) {
  if (k < 1 || k + 1 > m || m > 63) fail(ErrorCode::domain_error, "need 1 <= k <= m - 1");
  return ((std::uint64_t{1} << k) - 1) * ((std::uint64_t{1} << (m - k)) - 1);
}

std::vector<SubwordIndexPair> alt_subword_family(std::size_t k, std::size_t m) {
  std::uint64_t count = alt_subword_count(k, m);
  if (count > 5'000'000) fail(ErrorCode::resource_limit, "subword family too large");
  std::vector<SubwordIndexPair> out;
  out.reserve(count);
  auto subset = [](std::uint64_t mask) {
    std::vector<std::size_t> v;
    for (std::size_t b = 0; mask >> b; ++b)
      if ((mask >> b) & 1) v.push_back(b + 1);
    return v;
  };
  for (std::uint64_t mi = 1; mi < (std::uint64_t{1} << k); ++mi)
    for (std::uint64_t mj = 1; mj < (std::uint64_t{1} << (m - k)); ++mj) out.push_back({subset(mi), subset(mj)});
  return out;
}

}  // namespace nalen
