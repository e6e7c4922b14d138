#include "nalen/bounds.hpp"

#include <algorithm>
#include <bit>

namespace nalen {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::domain_error, what);
}

std::uint64_t pow2(std::uint64_t n) {
  need(n <= 62, "argument too large");
  return std::uint64_t{1} << n;
}

}  // namespace

std::uint64_t alt_min_dim(std::uint64_t n) {
  need(n >= 2, "alt_min_dim needs n >= 2");
  return pow2(n - 1) + n - 2;
}

std::uint64_t alt_max_length(std::uint64_t d) {
  need(d >= 3, "alt_max_length needs dim - d0 >= 3");
  return static_cast<std::uint64_t>(std::bit_width(d - 1));
}

std::uint64_t flex_min_dim(std::uint64_t n) {
  need(n >= 1, "flex_min_dim needs n >= 1");
  if (n <= 2) return n;
  if (n <= 5) return 2 * n - 1;
  return 3 * pow2(n - 4) + n - 3;
}

std::uint64_t flex_max_length(std::uint64_t d) {
  need(d >= 3, "flex_max_length needs dim - d0 >= 3");
  if (d <= 10) return (d + 1) / 2;
  need(d <= (std::uint64_t{1} << 58), "argument too large");
  // ceil(log2 d + log2(8/3)) = least n with 2^n >= 8d/3
  std::uint64_t n = 0;
  while (3 * pow2(n) < 8 * d) ++n;
  return n;
}

std::uint64_t flex_max_length_inverse(std::uint64_t d) {
  need(d >= 3, "flex_max_length needs dim - d0 >= 3");
  std::uint64_t n = 1;
  while (n < 62 && flex_min_dim(n + 1) <= d) ++n;
  return n;
}

const char* to_string(BoundClass c) { return c == BoundClass::alt ? "alt" : "flex"; }

std::uint64_t quick_set_bound(std::uint64_t d1, BoundClass c) {
  if (d1 == 0) return 0;
  return c == BoundClass::alt ? 2 * d1 : 3 * d1 - 1;
}

std::uint64_t alt_word_dim_bound(std::uint64_t n, std::uint64_t k) {
  need(k >= 1 && k + 1 <= n, "alt_word_dim_bound needs 1 <= k <= n - 1");
  return std::max(k, n - k) + pow2(n) - pow2(k) - pow2(n - k) + 1;
}

bool BoundReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.pass; });
}

namespace {

using Inputs = std::vector<std::pair<std::string, std::int64_t>>;

std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

struct Auditor {
  BoundReport report;

  // lhs >= rhs
  void at_least(std::string name, std::string subject, Inputs inputs, const std::string& lhs_name,
                std::uint64_t lhs, const std::string& rhs_name, std::uint64_t rhs) {
    BoundEntry e;
    e.name = std::move(name);
    e.subject = std::move(subject);
    e.inputs = std::move(inputs);
    e.inequality = lhs_name + " >= " + rhs_name;
    e.observed = std::to_string(lhs) + " >= " + std::to_string(rhs);
    e.pass = lhs >= rhs;
    e.equality = lhs == rhs;
    report.entries.push_back(std::move(e));
  }
};

struct CanonicalWitness {
  Word word;
  CanonicalWord alt, flex;
  bool has_alt = false, has_flex = false;
};

// a word of S^(n) outside Lin_{n-1}(S), with its canonical forms
std::optional<CanonicalWitness> find_witness(const Algebra& a, const GeneratorSet& s, std::size_t n, bool want_alt,
                                             bool want_flex, std::uint64_t budget) {
  if (n < 2 || s.size() == 0) return std::nullopt;
  LevelSpans spans(a, s);
  const SpanBasis& lower = spans.lin(n - 1);
  std::optional<RestrictedWordStream> stream;
  try {
    stream.emplace(s.size(), n, budget);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::resource_limit) return std::nullopt;
    throw;
  }
  while (auto w = stream->next()) {
    if (lower.contains(evaluate(a, s, *w))) continue;
    CanonicalWitness cw{*w, {}, {}};
    if (want_alt) {
      cw.alt = canonical_alt_form(*w);
      cw.has_alt = true;
    }
    if (want_flex && n >= 3) {
      cw.flex = canonical_flex_form(*w);
      cw.has_flex = true;
    }
    return cw;
  }
  return std::nullopt;
}

}  // namespace

BoundReport audit(const Algebra& a, const ClassificationReport& report, const LengthData& lengths) {
  Auditor au;
  const bool alt = report.descendingly_alternative.holds();
  const bool flex = report.descendingly_flexible.holds();
  const std::uint64_t big_d = a.dim() - a.d0();

  if (lengths.algebra_length) {
    const std::uint64_t n = *lengths.algebra_length;
    Inputs in{{"dim", i64(a.dim())}, {"d0", i64(a.d0())}, {"l(A)", i64(n)}};
    if (alt && n >= 2) au.at_least("alt_min_dim", "A", in, "dim - d0", big_d, "alt_min_dim(l(A))", alt_min_dim(n));
    if (alt && big_d >= 3)
      au.at_least("alt_max_length", "A", in, "alt_max_length(dim - d0)", alt_max_length(big_d), "l(A)", n);
    if (flex && n >= 1)
      au.at_least("flex_min_dim", "A", in, "dim - d0", big_d, "flex_min_dim(l(A))", flex_min_dim(n));
    if (flex && big_d >= 3) {
      au.at_least("flex_max_length_inverse", "A", in, "max{n : flex_min_dim(n) <= dim - d0}",
                  flex_max_length_inverse(big_d), "l(A)", n);
      au.at_least("flex_max_length", "A", in, "flex_max_length(dim - d0)", flex_max_length(big_d), "l(A)", n);
    }
  }

  for (const auto& sl : lengths.sets) {
    const DiffSequence& seq = sl.sequence;
    const std::uint64_t n = seq.length;
    const std::uint64_t d1 = seq.d.size() > 1 ? seq.d[1] : 0;
    const std::uint64_t lin = seq.span_dim - (seq.d.empty() ? 0 : seq.d[0]);
    auto d_at = [&](std::size_t k) -> std::uint64_t { return k < seq.d.size() ? seq.d[k] : 0; };
    Inputs in{{"l(S)", i64(n)}, {"d1", i64(d1)}, {"dim Lin(S) - d0", i64(lin)}, {"dim", i64(a.dim())},
              {"d0", i64(a.d0())}};

    if (alt) {
      au.at_least("quick_alt", sl.name, in, "2 d1", quick_set_bound(d1, BoundClass::alt), "l(S)", n);
      if (n >= 2) au.at_least("alt_min_dim", sl.name, in, "dim Lin(S) - d0", lin, "alt_min_dim(l(S))", alt_min_dim(n));
      if (big_d >= 3) au.at_least("alt_max_length", sl.name, in, "alt_max_length(dim - d0)", alt_max_length(big_d), "l(S)", n);
    }
    if (flex) {
      au.at_least("quick_flex", sl.name, in, "3 d1 - 1", quick_set_bound(d1, BoundClass::flex), "l(S)", n);
      if (n >= 1) au.at_least("flex_min_dim", sl.name, in, "dim Lin(S) - d0", lin, "flex_min_dim(l(S))", flex_min_dim(n));
      if (big_d >= 3)
        au.at_least("flex_max_length_inverse", sl.name, in, "max{n : flex_min_dim(n) <= dim - d0}",
                    flex_max_length_inverse(big_d), "l(S)", n);
      if (n == 3 || n == 4)
        for (std::size_t k = 1; k < n; ++k)
          au.at_least("flex_low_length", sl.name, in, "d" + std::to_string(k), d_at(k), "2", 2);
    }
    if (!(alt || flex) || n < 2) continue;

    auto cw = find_witness(a, sl.set, n, alt, flex, lengths.word_budget);
    if (!cw) continue;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < sl.set.size(); ++i) names.push_back(sl.set.name(i));
    std::string word = cw->word.to_string(names);
    if (cw->has_alt) {
      const std::uint64_t k = cw->alt.x_letters.size();
      Inputs win = in;
      win.push_back({"k", i64(k)});
      au.at_least("alt_word_dim", sl.name + " " + word, win, "dim Lin(S) - d0", lin, "alt_word_dim_bound(l(S), k)",
                  alt_word_dim_bound(n, k));
      au.at_least("alt_class_size", sl.name + " " + word, win, "d1", d1, "max{k, n - k}", std::max(k, n - k));
    }
    if (cw->has_flex) {
      const CanonicalWord& c = cw->flex;
      std::string subject = sl.name + " " + word + " [" + to_string(*c.shape) + "]";
      if (c.blocks.size() == 3) {
        std::uint64_t j = c.blocks[0].length(), k = c.blocks[1].length(), l = c.blocks[2].length();
        Inputs win = in;
        win.insert(win.end(), {{"j", i64(j)}, {"k", i64(k)}, {"l", i64(l)}});
        au.at_least("flex_short_length_d1", subject, win, "d1", d1, "max{j, k, l}", std::max({j, k, l}));
        au.at_least("flex_short_length_d2", subject, win, "d2", d_at(2), "max{jk, kl, jl}",
                    std::max({j * k, k * l, j * l}));
        if (k == 1 && l == 1)
          au.at_least("flex_1_subwords", subject, win, "dim Lin(S) - d0", lin, "2^{n-2} + n - 2",
                      pow2(n - 2) + n - 2);
      }
    }
  }
  return au.report;
}

}  // namespace nalen
