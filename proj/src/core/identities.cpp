#include "nalen/identities.hpp"

#include <functional>
#include <random>

#include "nalen/parallel.hpp"
#include "nalen/spans.hpp"

namespace nalen {

const char* relation_tag(Relation r) {
  switch (r) {
    case Relation::flexible: return "flexible";
    case Relation::flexible_linearized: return "flexible-linearized";
    case Relation::alt_left: return "left-alternative";
    case Relation::alt_left_linearized: return "left-alternative-linearized";
    case Relation::alt_right: return "right-alternative";
    case Relation::alt_right_linearized: return "right-alternative-linearized";
    case Relation::left_sliding: return "left-sliding";
    case Relation::right_sliding: return "right-sliding";
    case Relation::mixing: return "mixing";
    case Relation::df_pair: return "desc-flexible-pair";
    case Relation::df_triple: return "desc-flexible-triple";
    case Relation::da_pair: return "desc-alternative-pair";
    case Relation::da_triple: return "desc-alternative-triple";
    case Relation::aa_coefficient: return "aa-coefficient";
  }
  return "unknown";
}

std::size_t relation_arity(Relation r) {
  switch (r) {
    case Relation::flexible:
    case Relation::alt_left:
    case Relation::alt_right:
    case Relation::df_pair:
    case Relation::da_pair: return 2;
    default: return 3;
  }
}

std::vector<std::string> relation_argument_names(Relation r) {
  switch (r) {
    case Relation::left_sliding:
    case Relation::right_sliding:
    case Relation::mixing: return {"x", "y", "z"};
    case Relation::aa_coefficient: return {"a", "a'", "b"};
    default: break;
  }
  if (relation_arity(r) == 2) return {"a", "b"};
  return {"a", "b", "c"};
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::holds_exhaustive: return "holds-exhaustive";
    case VerdictKind::holds_randomized: return "holds-randomized";
    case VerdictKind::fails: return "fails";
    case VerdictKind::inconclusive: return "inconclusive";
  }
  return "unknown";
}

const char* to_string(Variant v) { return v == Variant::flex ? "flex" : "alt"; }

namespace {

struct Named {
  std::string name;
  Element value;
};

std::optional<Violation> equality(std::string term, std::string condition, Element diff) {
  if (diff.is_zero()) return std::nullopt;
  return Violation{std::move(term), std::move(condition), std::move(diff)};
}

std::string span_text(const Algebra& a, const std::vector<Named>& list) {
  std::string s = "Lin(";
  bool first = true;
  if (a.unital()) {
    s += "e";
    first = false;
  }
  for (const auto& n : list) {
    s += first ? "" : ", ";
    s += n.name;
    first = false;
  }
  return s + ")";
}

// target must lie in the span of the list, with the unity adjoined when present
std::optional<Violation> membership(const Algebra& a, const std::vector<Named>& list, const Named& target) {
  SpanBasis s(a.field(), a.dim());
  if (a.unital()) s.insert(*a.unity());
  for (const auto& n : list) s.insert(n.value);
  if (s.contains(target.value)) return std::nullopt;
  return Violation{target.name, target.name + " in " + span_text(a, list), target.value};
}

}  // namespace

std::optional<Violation> probe(const Algebra& A, Relation r, const std::vector<Element>& args) {
  if (args.size() != relation_arity(r))
    fail(ErrorCode::invalid_argument, std::string(relation_tag(r)) + " takes " + std::to_string(relation_arity(r)) +
                                          " arguments");
  auto m = [&](const Element& x, const Element& y) { return A.multiply(x, y); };
  const Element& a = args[0];
  const Element& b = args[1];
  switch (r) {
    case Relation::flexible:
      return equality("(ab)a - a(ba)", "(ab)a = a(ba)", m(m(a, b), a) - m(a, m(b, a)));
    case Relation::flexible_linearized: {
      const Element& c = args[2];
      return equality("(ab)c + (cb)a - a(bc) - c(ba)", "(ab)c + (cb)a = a(bc) + c(ba)",
                      m(m(a, b), c) + m(m(c, b), a) - m(a, m(b, c)) - m(c, m(b, a)));
    }
    case Relation::alt_left:
      return equality("a(ab) - (aa)b", "a(ab) = (aa)b", m(a, m(a, b)) - m(m(a, a), b));
    case Relation::alt_left_linearized: {
      const Element& c = args[2];
      return equality("a(cb) + c(ab) - (ac)b - (ca)b", "a(cb) + c(ab) = (ac)b + (ca)b",
                      m(a, m(c, b)) + m(c, m(a, b)) - m(m(a, c), b) - m(m(c, a), b));
    }
    case Relation::alt_right:
      return equality("(ba)a - b(aa)", "(ba)a = b(aa)", m(m(b, a), a) - m(b, m(a, a)));
    case Relation::alt_right_linearized: {
      const Element& c = args[2];
      return equality("(ba)c + (bc)a - b(ac) - b(ca)", "(ba)c + (bc)a = b(ac) + b(ca)",
                      m(m(b, a), c) + m(m(b, c), a) - m(b, m(a, c)) - m(b, m(c, a)));
    }
    case Relation::left_sliding:
    case Relation::right_sliding:
    case Relation::mixing: {
      const Element& x = args[0];
      const Element& y = args[1];
      const Element& z = args[2];
      std::vector<Named> low = {{"xy", m(x, y)}, {"yx", m(y, x)}, {"xz", m(x, z)}, {"zx", m(z, x)},
                                {"yz", m(y, z)}, {"zy", m(z, y)}, {"x", x},         {"y", y},
                                {"z", z}};
      std::vector<Named> ql = {{"x(zy)", m(x, m(z, y))}, {"x(yz)", m(x, m(y, z))}, {"y(xz)", m(y, m(x, z))},
                               {"y(zx)", m(y, m(z, x))}};
      std::vector<Named> qr = {{"(xz)y", m(m(x, z), y)}, {"(zx)y", m(m(z, x), y)}, {"(yz)x", m(m(y, z), x)},
                               {"(zy)x", m(m(z, y), x)}};
      Named left{"(xy)z", m(m(x, y), z)};
      Named right{"z(xy)", m(z, m(x, y))};
      std::vector<Named> list;
      if (r != Relation::right_sliding) list.insert(list.end(), ql.begin(), ql.end());
      if (r != Relation::left_sliding) list.insert(list.end(), qr.begin(), qr.end());
      list.insert(list.end(), low.begin(), low.end());
      if (r == Relation::right_sliding) return membership(A, list, right);
      if (auto v = membership(A, list, left)) return v;
      if (r == Relation::mixing) return membership(A, list, right);
      return std::nullopt;
    }
    case Relation::df_pair:
    case Relation::da_pair: {
      std::vector<Named> list = {{"a", a}, {"b", b}, {"aa", m(a, a)}, {"ab", m(a, b)}, {"ba", m(b, a)}};
      if (r == Relation::df_pair) {
        if (auto v = membership(A, list, {"(ab)a", m(m(a, b), a)})) return v;
        return membership(A, list, {"a(ba)", m(a, m(b, a))});
      }
      if (auto v = membership(A, list, {"(ba)a", m(m(b, a), a)})) return v;
      return membership(A, list, {"a(ab)", m(a, m(a, b))});
    }
    case Relation::df_triple:
    case Relation::da_triple: {
      const Element& c = args[2];
      std::vector<Named> list = {{"a", a},       {"b", b},       {"c", c},       {"ab", m(a, b)}, {"ba", m(b, a)},
                                 {"cb", m(c, b)}, {"bc", m(b, c)}, {"ac", m(a, c)}, {"ca", m(c, a)}};
      if (r == Relation::df_triple) {
        if (auto v = membership(A, list, {"(ab)c + (cb)a", m(m(a, b), c) + m(m(c, b), a)})) return v;
        return membership(A, list, {"a(bc) + c(ba)", m(a, m(b, c)) + m(c, m(b, a))});
      }
      if (auto v = membership(A, list, {"(ab)c + (ac)b", m(m(a, b), c) + m(m(a, c), b)})) return v;
      return membership(A, list, {"a(bc) + b(ac)", m(a, m(b, c)) + m(b, m(a, c))});
    }
    case Relation::aa_coefficient:
      fail(ErrorCode::invalid_argument, "the aa-coefficient relation is checked by check_sufficient_condition");
  }
  return std::nullopt;
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

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t tag, std::uint64_t i, std::uint64_t j = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag),  static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(i >> 32), static_cast<std::uint32_t>(j)};
  return std::mt19937_64(seq);
}

Element random_element(const Algebra& a, std::mt19937_64& gen) {
  Element x(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.field().is_rational())
      x[i] = Scalar(a.field(), static_cast<long long>(gen() % 5) - 2);
    else
      x[i] = Scalar::from_residue(a.field(), gen() % a.field().modulus());
  }
  return x;
}

struct Sampling {
  std::size_t count = 0;
  bool exhaustive = false;
  std::vector<std::string> notes;
};

class Checker {
 public:
  Checker(const Algebra& a, const IdentityOptions& o) : a_(a), o_(o) {}

  // all tuples of basis vectors
  std::optional<Witness> basis(Relation r, const std::string& source = "basis") {
    const std::size_t k = relation_arity(r), n = a_.dim();
    const std::uint64_t total = saturating_pow(n, k);
    auto indices = [&](std::size_t i) {
      std::vector<std::size_t> idx(k);
      for (std::size_t t = k; t-- > 0;) {
        idx[t] = i % n;
        i /= n;
      }
      return idx;
    };
    auto args = [&](std::size_t i) {
      std::vector<Element> v;
      for (std::size_t j : indices(i)) v.push_back(a_.basis(j));
      return v;
    };
    auto w = find(r, total, args);
    if (w) {
      w->source = source;
      w->basis_indices = indices(w->sample_index);
      w->sample_index = 0;
    }
    return w;
  }

  // every tuple of field elements when affordable, else seeded random tuples
  std::optional<Witness> sampled(Relation r, Sampling& s) {
    const std::size_t k = relation_arity(r), n = a_.dim();
    if (a_.field().is_prime()) {
      const std::uint64_t p = a_.field().modulus();
      const std::uint64_t total = saturating_pow(p, k * n);
      if (total <= o_.exhaustive_budget) {
        s.exhaustive = true;
        s.count = total;
        auto args = [&](std::size_t i) {
          std::vector<Element> v(k, a_.zero());
          for (std::size_t t = k; t-- > 0;)
            for (std::size_t c = n; c-- > 0;) {
              v[t][c] = Scalar::from_residue(a_.field(), i % p);
              i /= p;
            }
          return v;
        };
        auto w = find(r, total, args);
        if (w) w->source = "all-elements";
        return w;
      }
    }
    s.exhaustive = false;
    s.count = sample_count(s);
    const auto tag = static_cast<std::uint64_t>(r) + 1;
    auto args = [&](std::size_t i) {
      auto gen = sample_rng(o_.seed, tag, i);
      std::vector<Element> v;
      for (std::size_t t = 0; t < k; ++t) v.push_back(random_element(a_, gen));
      return v;
    };
    auto w = find(r, s.count, args);
    if (w) w->source = "random";
    return w;
  }

  std::size_t sample_count(Sampling& s) const {
    if (a_.field().char_two()) {
      std::size_t raised = o_.samples * 4;
      s.notes.push_back("characteristic 2: randomized coverage is weak, sample count raised to " +
                        std::to_string(raised));
      return raised;
    }
    return o_.samples;
  }

 private:
  template <class Args>
  std::optional<Witness> find(Relation r, std::uint64_t total, Args args) {
    auto hit = parallel_find_first(static_cast<std::size_t>(total), o_.threads,
                                   [&](std::size_t i) { return probe(a_, r, args(i)).has_value(); });
    if (!hit) return std::nullopt;
    Witness w;
    w.relation = r;
    w.arguments = args(*hit);
    w.sample_index = *hit;
    w.violation = *probe(a_, r, w.arguments);
    return w;
  }

  const Algebra& a_;
  const IdentityOptions& o_;
};

Verdict failed(Witness w) {
  Verdict v;
  v.kind = VerdictKind::fails;
  v.witness = std::move(w);
  return v;
}

Verdict passed(const Sampling& s, bool exhaustive) {
  Verdict v;
  v.kind = exhaustive ? VerdictKind::holds_exhaustive : VerdictKind::holds_randomized;
  v.samples = s.count;
  v.notes = s.notes;
  return v;
}

// quadratic-in-a identities: basis pairs plus linearized basis triples determine them
Verdict check_quadratic(const Algebra& a, const IdentityOptions& o, const std::vector<Relation>& pair,
                        const std::vector<Relation>& linear) {
  Checker c(a, o);
  for (Relation r : pair)
    if (auto w = c.basis(r)) return failed(std::move(*w));
  for (Relation r : linear)
    if (auto w = c.basis(r, "linearized-basis")) return failed(std::move(*w));
  Sampling s;
  for (Relation r : pair)
    if (auto w = c.sampled(r, s))
      fail(ErrorCode::internal_consistency, std::string(relation_tag(r)) +
                                                " holds on the basis and its linearization but fails on a sample");
  Verdict v = passed(s, true);
  v.notes.push_back("basis pairs and linearized basis triples determine the identity");
  return v;
}

Verdict check_triple(const Algebra& a, const IdentityOptions& o, Relation r) {
  Checker c(a, o);
  if (auto w = c.basis(r)) return failed(std::move(*w));
  Sampling s;
  if (auto w = c.sampled(r, s)) return failed(std::move(*w));
  return passed(s, s.exhaustive);
}

Verdict check_descending(const Algebra& a, const IdentityOptions& o, Relation pair, Relation triple) {
  Checker c(a, o);
  if (auto w = c.basis(pair)) return failed(std::move(*w));
  if (auto w = c.basis(triple)) return failed(std::move(*w));
  Sampling st;
  if (auto w = c.sampled(triple, st)) return failed(std::move(*w));
  bool exhaustive = st.exhaustive;
  if (a.field().char_two()) {
    Sampling sp;
    if (auto w = c.sampled(pair, sp)) return failed(std::move(*w));
    exhaustive = exhaustive && sp.exhaustive;
  } else {
    st.notes.push_back("pair condition on samples skipped: implied by the triple conditions outside characteristic 2");
  }
  return passed(st, exhaustive);
}

}  // namespace

Verdict check_flexible(const Algebra& a, const IdentityOptions& o) {
  return check_quadratic(a, o, {Relation::flexible}, {Relation::flexible_linearized});
}

Verdict check_alternative(const Algebra& a, const IdentityOptions& o) {
  return check_quadratic(a, o, {Relation::alt_left, Relation::alt_right},
                         {Relation::alt_left_linearized, Relation::alt_right_linearized});
}

Verdict check_left_sliding(const Algebra& a, const IdentityOptions& o) {
  return check_triple(a, o, Relation::left_sliding);
}

Verdict check_right_sliding(const Algebra& a, const IdentityOptions& o) {
  return check_triple(a, o, Relation::right_sliding);
}

Verdict check_mixing(const Algebra& a, const IdentityOptions& o) { return check_triple(a, o, Relation::mixing); }

Verdict check_descendingly_flexible(const Algebra& a, const IdentityOptions& o) {
  return check_descending(a, o, Relation::df_pair, Relation::df_triple);
}

Verdict check_descendingly_alternative(const Algebra& a, const IdentityOptions& o) {
  return check_descending(a, o, Relation::da_pair, Relation::da_triple);
}

std::optional<Violation> check_descending_at(const Algebra& a, Variant v, const Element& x, const Element& y,
                                             const Element& z) {
  return probe(a, v == Variant::flex ? Relation::df_triple : Relation::da_triple, {x, y, z});
}

namespace {

struct Targets {
  std::string name[2];
  Element value[2];
};

Targets sufficient_targets(const Algebra& A, Variant v, const Element& a, const Element& b) {
  auto m = [&](const Element& x, const Element& y) { return A.multiply(x, y); };
  if (v == Variant::flex) return {{"(ab)a", "a(ba)"}, {m(m(a, b), a), m(a, m(b, a))}};
  return {{"(ba)a", "a(ab)"}, {m(m(b, a), a), m(a, m(a, b))}};
}

struct Representation {
  bool member = true;
  std::optional<Scalar> coefficient;
};

// coefficient at aa of target in Lin(e, a, b, aa, ab, ba), if it is determined
Representation aa_coefficient(const Algebra& A, const Element& a, const Element& b, const Element& target) {
  SpanBasis rest(A.field(), A.dim());
  if (A.unital()) rest.insert(*A.unity());
  rest.insert(a);
  rest.insert(b);
  rest.insert(A.multiply(a, b));
  rest.insert(A.multiply(b, a));
  Element aa = A.multiply(a, a);
  Element raa = rest.reduce(aa);
  Element rt = rest.reduce(target);
  Representation out;
  if (raa.is_zero()) {
    out.member = rt.is_zero();
    return out;
  }
  std::size_t k = 0;
  while (raa[k].is_zero()) ++k;
  Scalar c = rt[k] / raa[k];
  out.member = (rt - c * raa).is_zero();
  if (out.member) out.coefficient = c;
  return out;
}

}  // namespace

SufficientReport check_sufficient_condition(const Algebra& A, Variant v, const IdentityOptions& o) {
  SufficientReport rep;
  const std::size_t bs = 8;
  std::size_t per_b = std::max<std::size_t>(1, o.samples / bs);
  if (A.field().char_two()) per_b *= 4;
  const std::uint64_t tag_b = 101 + static_cast<std::uint64_t>(v), tag_a = 201 + static_cast<std::uint64_t>(v);
  const Relation pair = v == Variant::flex ? Relation::df_pair : Relation::da_pair;

  for (std::size_t t = 0; t < bs; ++t) {
    auto gb = sample_rng(o.seed, tag_b, t);
    Element b = random_element(A, gb);
    std::optional<Scalar> seen[2];
    std::optional<Element> seen_a[2];
    for (std::size_t u = 0; u < per_b; ++u) {
      auto ga = sample_rng(o.seed, tag_a, t, u + 1);
      Element a = random_element(A, ga);
      SpanBasis indep(A.field(), A.dim());
      std::size_t want = 2;
      if (A.unital()) {
        indep.insert(*A.unity());
        ++want;
      }
      indep.insert(a);
      indep.insert(b);
      if (indep.rank() != want) continue;
      ++rep.informative;
      Targets tg = sufficient_targets(A, v, a, b);
      bool forced = false;
      for (int i = 0; i < 2; ++i) {
        Representation r = aa_coefficient(A, a, b, tg.value[i]);
        if (!r.member) {
          Witness w;
          w.relation = pair;
          w.arguments = {a, b};
          w.source = "random";
          w.sample_index = t * per_b + u;
          w.violation = *probe(A, pair, w.arguments);
          rep.verdict = Verdict{VerdictKind::fails, rep.informative, std::move(w), "", {}};
          return rep;
        }
        rep.records.push_back({t, tg.name[i], r.coefficient});
        if (!r.coefficient) continue;
        forced = true;
        if (seen[i] && !(*seen[i] == *r.coefficient)) {
          Witness w;
          w.relation = Relation::aa_coefficient;
          w.arguments = {*seen_a[i], a, b};
          w.source = "random";
          w.sample_index = t * per_b + u;
          w.violation = Violation{tg.name[i],
                                  "coefficient at aa in " + tg.name[i] + " depends on b only (found " +
                                      seen[i]->to_string() + " and " + r.coefficient->to_string() + ")",
                                  A.zero()};
          rep.verdict = Verdict{VerdictKind::fails, rep.informative, std::move(w), "", {}};
          return rep;
        }
        if (!seen[i]) {
          seen[i] = r.coefficient;
          seen_a[i] = a;
        }
      }
      if (forced) ++rep.forced;
    }
  }
  if (rep.informative == 0) {
    rep.verdict.kind = VerdictKind::inconclusive;
    rep.verdict.reason = A.unital() ? "a, b and e were never linearly independent" : "a and b were never linearly independent";
    return rep;
  }
  rep.verdict.kind = VerdictKind::holds_randomized;
  rep.verdict.samples = rep.informative;
  rep.verdict.notes.push_back("aa-coefficient determined in " + std::to_string(rep.forced) + " of " +
                              std::to_string(rep.informative) + " informative samples; elsewhere aa lies in the span of the other terms");
  if (A.field().char_two()) rep.verdict.notes.push_back("characteristic 2: sample count raised");
  return rep;
}

bool replay_witness(const Algebra& A, const Witness& w) {
  if (w.relation == Relation::aa_coefficient) {
    if (w.arguments.size() != 3) return false;
    const Element& b = w.arguments[2];
    for (Variant v : {Variant::flex, Variant::alt}) {
      Targets t1 = sufficient_targets(A, v, w.arguments[0], b);
      Targets t2 = sufficient_targets(A, v, w.arguments[1], b);
      for (int i = 0; i < 2; ++i) {
        if (t1.name[i] != w.violation.term) continue;
        Representation r1 = aa_coefficient(A, w.arguments[0], b, t1.value[i]);
        Representation r2 = aa_coefficient(A, w.arguments[1], b, t2.value[i]);
        if (r1.coefficient && r2.coefficient && !(*r1.coefficient == *r2.coefficient)) return true;
      }
    }
    return false;
  }
  auto v = probe(A, w.relation, w.arguments);
  return v && v->term == w.violation.term && v->value == w.violation.value;
}

ClassificationReport classify(const Algebra& a, const IdentityOptions& o) {
  ClassificationReport r;
  r.field = a.field();
  r.seed = o.seed;
  r.samples = o.samples;
  r.flexible = check_flexible(a, o);
  r.alternative = check_alternative(a, o);
  r.left_sliding = check_left_sliding(a, o);
  r.right_sliding = check_right_sliding(a, o);
  r.mixing = check_mixing(a, o);
  r.descendingly_flexible = check_descendingly_flexible(a, o);
  r.descendingly_alternative = check_descendingly_alternative(a, o);
  r.sufficient_flex = check_sufficient_condition(a, Variant::flex, o);
  r.sufficient_alt = check_sufficient_condition(a, Variant::alt, o);
  if (a.field().is_rational())
    r.characteristic_note = "characteristic 0";
  else if (a.field().char_two())
    r.characteristic_note = "characteristic 2: pair conditions tested directly, randomized sample counts raised";
  else
    r.characteristic_note = "characteristic " + std::to_string(a.field().modulus());

  if (r.descendingly_flexible.holds() && r.mixing.fails())
    r.inconsistencies.push_back("descendingly flexible holds but mixing fails");
  if (r.descendingly_alternative.holds() && r.mixing.fails())
    r.inconsistencies.push_back("descendingly alternative holds but mixing fails");
  if (r.alternative.holds() && r.flexible.fails())
    r.inconsistencies.push_back("alternative holds but flexible fails");
  return r;
}

bool mixing_licensed(const ClassificationReport& r) {
  return r.mixing.holds() || r.left_sliding.holds() || r.right_sliding.holds();
}

}  // namespace nalen
