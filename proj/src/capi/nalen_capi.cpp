#include "nalen/nalen.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <map>
#include <random>
#include <string>

#include "nalen/bounds.hpp"
#include "nalen/canonical.hpp"
#include "nalen/examples.hpp"
#include "nalen/identities.hpp"
#include "nalen/io.hpp"
#include "nalen/parallel.hpp"
#include "nalen/spans.hpp"

using json = nlohmann::ordered_json;

struct nalen_algebra {
  nalen::Algebra algebra;
};

namespace {

using namespace nalen;

thread_local std::string last_error;

int status_of(ErrorCode c) { return static_cast<int>(c); }

template <class F>
int guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return NALEN_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("bad options: ") + e.what();
    return NALEN_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NALEN_UNKNOWN_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) {
  require(out, "output pointer");
  *out = dup(j.dump(2) + "\n");
}

json parse_options(const char* text) {
  if (!text || !*text) return json::object();
  json j = json::parse(text);
  if (!j.is_object()) fail(ErrorCode::invalid_argument, "options must be a JSON object");
  return j;
}

template <class T>
T opt(const json& o, const char* key, T fallback) {
  auto it = o.find(key);
  if (it == o.end() || it->is_null()) return fallback;
  return it->get<T>();
}

IdentityOptions identity_options(const json& o) {
  IdentityOptions io;
  io.seed = opt<std::uint64_t>(o, "seed", 0);
  io.samples = opt<std::size_t>(o, "samples", 64);
  io.threads = opt<unsigned>(o, "threads", 1);
  return io;
}

FieldSpec parse_field(const std::string& s) {
  if (s == "rational" || s == "Q") return FieldSpec::rationals();
  std::string t = s;
  if (t.rfind("gf", 0) == 0) t = t.substr(2);
  while (!t.empty() && (t.front() == ' ' || t.front() == '(')) t.erase(t.begin());
  while (!t.empty() && (t.back() == ' ' || t.back() == ')')) t.pop_back();
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::parse_error, "unknown field '" + s + "'");
  std::uint64_t p = std::stoull(t);
  if (!is_prime_number(p)) fail(ErrorCode::parse_error, "modulus " + t + " is not prime");
  return FieldSpec::prime(p);
}

json element_json(const Element& e, const std::vector<std::string>& labels) {
  json coords = json::array();
  for (const auto& c : e.coords()) coords.push_back(c.to_string());
  return json{{"expr", e.to_expression(labels)}, {"coords", coords}};
}

json set_json(const GeneratorSet& s, const Algebra& a) {
  json out = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    json e = element_json(s.elements[i], a.labels());
    e["name"] = s.name(i);
    out.push_back(e);
  }
  return out;
}

// term with argument names replaced by labels or bracketed expressions
std::string instantiate(const std::string& term, const std::vector<std::string>& names,
                        const std::vector<Element>& args, const Algebra& a) {
  auto render = [&](const Element& e) {
    std::size_t nz = 0, at = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!e[i].is_zero()) ++nz, at = i;
    if (nz == 1 && e[at].is_one()) return a.label(at);
    return "[" + e.to_expression(a.labels()) + "]";
  };
  std::string out;
  bool prev_atom = false;
  for (std::size_t p = 0; p < term.size();) {
    std::size_t best = names.size(), best_len = 0;
    for (std::size_t n = 0; n < names.size() && n < args.size(); ++n)
      if (term.compare(p, names[n].size(), names[n]) == 0 && names[n].size() > best_len) best = n, best_len = names[n].size();
    if (best < names.size()) {
      if (prev_atom) out += ' ';
      out += render(args[best]);
      prev_atom = true;
      p += best_len;
    } else {
      char c = term[p++];
      if (c == '(' && prev_atom && !out.empty() && out.back() == ')') out += ' ';
      out += c;
      prev_atom = c == ')';
    }
  }
  return out;
}

json witness_json(const Witness& w, const Algebra& a) {
  json args = json::array();
  auto names = relation_argument_names(w.relation);
  for (std::size_t i = 0; i < w.arguments.size(); ++i) {
    json e = element_json(w.arguments[i], a.labels());
    e["name"] = i < names.size() ? names[i] : "arg" + std::to_string(i + 1);
    args.push_back(e);
  }
  json j{{"relation", relation_tag(w.relation)}, {"source", w.source}, {"arguments", args}};
  if (!w.basis_indices.empty()) {
    json idx = json::array();
    for (auto i : w.basis_indices) idx.push_back(i + 1);
    j["basis_indices"] = idx;
  } else {
    j["sample_index"] = w.sample_index;
  }
  j["term"] = w.violation.term;
  j["instance"] = instantiate(w.violation.term, names, w.arguments, a);
  j["condition"] = w.violation.condition;
  j["value"] = element_json(w.violation.value, a.labels());
  j["replayed"] = replay_witness(a, w);
  return j;
}

json verdict_json(const Verdict& v, const Algebra& a) {
  json j{{"verdict", to_string(v.kind)}, {"samples", v.samples}};
  if (v.witness) j["witness"] = witness_json(*v.witness, a);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

json sufficient_json(const SufficientReport& r, const Algebra& a) {
  json j = verdict_json(r.verdict, a);
  j["informative"] = r.informative;
  j["forced"] = r.forced;
  return j;
}

json algebra_json(const Algebra& a) {
  json j{{"field", a.field().name()}, {"dim", a.dim()}, {"unital", a.unital()}};
  if (a.unital()) j["unity"] = a.unity()->to_expression(a.labels());
  return j;
}

json classification_json(const ClassificationReport& r, const Algebra& a) {
  json v;
  v["flexible"] = verdict_json(r.flexible, a);
  v["alternative"] = verdict_json(r.alternative, a);
  v["left_sliding"] = verdict_json(r.left_sliding, a);
  v["right_sliding"] = verdict_json(r.right_sliding, a);
  v["mixing"] = verdict_json(r.mixing, a);
  v["descendingly_flexible"] = verdict_json(r.descendingly_flexible, a);
  v["descendingly_alternative"] = verdict_json(r.descendingly_alternative, a);
  v["sufficient_condition_flex"] = sufficient_json(r.sufficient_flex, a);
  v["sufficient_condition_alt"] = sufficient_json(r.sufficient_alt, a);
  json j{{"command", "classify"}, {"algebra", algebra_json(a)}, {"seed", r.seed}, {"samples", r.samples},
         {"verdicts", v}};
  if (!r.characteristic_note.empty()) j["characteristic_note"] = r.characteristic_note;
  j["inconsistencies"] = r.inconsistencies;
  bool replay_ok = true;
  for (const Verdict* x : {&r.flexible, &r.alternative, &r.left_sliding, &r.right_sliding, &r.mixing,
                           &r.descendingly_flexible, &r.descendingly_alternative})
    if (x->witness && !replay_witness(a, *x->witness)) replay_ok = false;
  j["falsified"] = !r.inconsistencies.empty() || !replay_ok;
  return j;
}

GeneratorSet generator_set(const Algebra& a, const json& o) {
  if (auto it = o.find("set_vectors"); it != o.end() && !it->is_null())
    return parse_generator_vectors(a, it->get<std::string>());
  return parse_generator_spec(a, opt<std::string>(o, "set", "basis"));
}

json diff_json(const DiffSequence& d) {
  return json{{"d", d.d},
              {"length", d.length},
              {"stabilized_by", to_string(d.stabilized_by)},
              {"generating", d.generating},
              {"span_dim", d.span_dim},
              {"levels_computed", d.levels_computed}};
}

struct ModeChoice {
  SpanMode mode = SpanMode::general;
  json licence;
};

ModeChoice choose_mode(const Algebra& a, const json& o) {
  std::string m = opt<std::string>(o, "mode", "general");
  ModeChoice c;
  if (m == "general") return c;
  if (m != "mixing" && m != "auto") fail(ErrorCode::invalid_argument, "mode must be general, mixing or auto");
  IdentityOptions io = identity_options(o);
  std::optional<std::pair<const char*, Verdict>> found;
  for (auto [name, check] : {std::pair{"mixing", &check_mixing}, std::pair{"left_sliding", &check_left_sliding},
                             std::pair{"right_sliding", &check_right_sliding}}) {
    Verdict v = check(a, io);
    if (v.holds()) {
      found.emplace(name, v);
      break;
    }
  }
  if (found) {
    c.mode = SpanMode::mixing;
    c.licence = json{{"class", found->first}, {"verdict", to_string(found->second.kind)}};
  } else if (m == "mixing") {
    fail(ErrorCode::invalid_argument, "mixing mode needs a mixing or sliding verdict, and none holds");
  } else {
    c.licence = json{{"class", nullptr}, {"verdict", "no mixing or sliding verdict holds"}};
  }
  return c;
}

SpanOptions span_options(const json& o) {
  SpanOptions s;
  s.max_level = opt<std::size_t>(o, "max_level", s.max_level);
  return s;
}

json canonical_json(const CanonicalWord& c, const std::vector<std::string>& names) {
  auto wstr = [&](const Word& w) { return names.empty() ? w.to_string() : w.to_string(names); };
  auto lname = [&](std::size_t l) { return l < names.size() ? names[l] : std::to_string(l + 1); };
  json j{{"variant", to_string(c.variant)}, {"sign", c.sign}, {"word", wstr(c.word)}};
  if (c.variant == CanonicalVariant::alt_two_block) {
    json x = json::array(), y = json::array();
    for (auto l : c.x_letters) x.push_back(lname(l));
    for (auto l : c.y_letters) y.push_back(lname(l));
    j["x"] = x;
    j["y"] = y;
  } else {
    j["shape"] = to_string(*c.shape);
    j["mirrored"] = c.mirrored;
    json blocks = json::array();
    for (const auto& b : c.blocks) {
      json outer = json::array();
      for (auto l : b.outer_letters()) outer.push_back(lname(l));
      blocks.push_back(json{{"name", b.name},
                            {"word", wstr(b.word)},
                            {"type", b.type == Side::left ? "left" : "right"},
                            {"inner", lname(b.inner_letter())},
                            {"outer", outer}});
    }
    j["blocks"] = blocks;
  }
  json part = json::array();
  for (const auto& cls : c.partition) {
    json p = json::array();
    for (const auto& s : cls) p.push_back(json{{"letter", lname(s.letter)}, {"block", s.block}, {"inner", s.inner}});
    part.push_back(p);
  }
  j["partition"] = part;
  j["largest_class"] = c.largest_class();
  return j;
}

Element random_element(const Algebra& a, std::mt19937_64& gen) {
  Element e(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.field().is_prime())
      e[i] = Scalar::from_residue(a.field(), gen() % a.field().modulus());
    else
      e[i] = Scalar(a.field(), static_cast<long long>(gen() % 5) - 2);
  }
  return e;
}

}  // namespace

extern "C" {

const char* nalen_version(void) { return "1.0.0"; }

const char* nalen_status_name(int status) {
  if (status == NALEN_OK) return "ok";
  if (status >= 1 && status <= 13) return error_code_name(static_cast<ErrorCode>(status));
  return "unknown_error";
}

const char* nalen_last_error(void) { return last_error.c_str(); }

void nalen_string_free(char* s) { std::free(s); }

int nalen_algebra_parse(const char* text, nalen_algebra** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new nalen_algebra{parse_algebra(text)};
  });
}

int nalen_algebra_load(const char* path, nalen_algebra** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output pointer");
    *out = new nalen_algebra{load_algebra(path)};
  });
}

int nalen_algebra_example(const char* request_json, nalen_algebra** out) {
  return guarded([&] {
    require(out, "output pointer");
    json r = parse_options(request_json);
    std::string name = opt<std::string>(r, "name", "");
    std::optional<std::string> field_text;
    if (r.contains("field") && !r["field"].is_null()) field_text = r["field"].get<std::string>();
    auto field_or = [&](FieldSpec f) { return field_text ? parse_field(*field_text) : f; };
    std::size_t n = opt<std::size_t>(r, "n", 0);
    auto need_n = [&] {
      if (!r.contains("n")) fail(ErrorCode::invalid_argument, "example '" + name + "' needs n");
    };
    std::optional<Algebra> a;
    if (name == "z2n") {
      need_n();
      if (field_text && !(parse_field(*field_text) == FieldSpec::prime(2)))
        fail(ErrorCode::invalid_argument, "z2n is defined over gf 2");
      a = make_group_algebra_z2n(n, opt<std::size_t>(r, "cap", 6));
    } else if (name == "aflex") {
      a = make_a_flex(field_or(FieldSpec::prime(2)));
    } else if (name == "aalt") {
      a = make_a_alt(field_or(FieldSpec::prime(2)));
    } else if (name == "spin") {
      need_n();
      a = make_spin_factor(n, field_or(FieldSpec::rationals()));
    } else if (name == "matrix") {
      need_n();
      a = make_matrix_algebra(n, field_or(FieldSpec::rationals()));
    } else if (name == "chain3") {
      a = make_chain3(field_or(FieldSpec::rationals()));
    } else if (name == "nil3") {
      a = make_nil3(field_or(FieldSpec::rationals()));
    } else if (name == "cd") {
      FieldSpec f = field_or(FieldSpec::rationals());
      std::size_t level = opt<std::size_t>(r, "level", 0);
      std::vector<Scalar> gammas;
      if (r.contains("gammas"))
        for (const auto& g : r["gammas"]) gammas.push_back(parse_scalar(g.get<std::string>(), f));
      else
        gammas.assign(level, -Scalar::one(f));
      a = make_cayley_dickson(f, level, gammas);
      std::string twist = opt<std::string>(r, "twist", "none");
      if (twist == "left") a = twist_conjugation(*a, TwistSide::left);
      else if (twist == "right") a = twist_conjugation(*a, TwistSide::right);
      else if (twist == "both") a = twist_conjugation(*a, TwistSide::both);
      else if (twist != "none") fail(ErrorCode::invalid_argument, "twist must be none, left, right or both");
    } else {
      fail(ErrorCode::invalid_argument, "unknown example '" + name + "'");
    }
    if (opt<bool>(r, "hull", false)) a = make_unital_hull(*a);
    *out = new nalen_algebra{*a};
  });
}

int nalen_algebra_hull(const nalen_algebra* a, nalen_algebra** out) {
  return guarded([&] {
    require(a, "algebra");
    require(out, "output pointer");
    *out = new nalen_algebra{make_unital_hull(a->algebra)};
  });
}

void nalen_algebra_free(nalen_algebra* a) { delete a; }

int nalen_algebra_dim(const nalen_algebra* a, size_t* out) {
  return guarded([&] {
    require(a, "algebra");
    require(out, "output pointer");
    *out = a->algebra.dim();
  });
}

int nalen_algebra_print(const nalen_algebra* a, char** text) {
  return guarded([&] {
    require(a, "algebra");
    require(text, "output pointer");
    *text = dup(print_algebra(a->algebra));
  });
}

int nalen_algebra_equal(const nalen_algebra* a, const nalen_algebra* b, int* out) {
  return guarded([&] {
    require(a, "algebra");
    require(b, "algebra");
    require(out, "output pointer");
    *out = a->algebra == b->algebra ? 1 : 0;
  });
}

int nalen_classify(const nalen_algebra* a, const char* options_json, char** report_json) {
  return guarded([&] {
    require(a, "algebra");
    json o = parse_options(options_json);
    ClassificationReport r = classify(a->algebra, identity_options(o));
    emit(classification_json(r, a->algebra), report_json);
  });
}

int nalen_diffseq(const nalen_algebra* a, const char* options_json, char** report_json) {
  return guarded([&] {
    require(a, "algebra");
    json o = parse_options(options_json);
    const Algebra& alg = a->algebra;
    GeneratorSet s = generator_set(alg, o);
    ModeChoice mc = choose_mode(alg, o);
    DiffSequence d = diff_sequence(alg, s, mc.mode, span_options(o));
    json j{{"command", "diffseq"}, {"algebra", algebra_json(alg)}, {"set", set_json(s, alg)},
           {"mode", to_string(mc.mode)}};
    if (!mc.licence.is_null()) j["licence"] = mc.licence;
    j["sequence"] = diff_json(d);
    emit(j, report_json);
  });
}

int nalen_exact_length(const nalen_algebra* a, const char* options_json, char** report_json) {
  return guarded([&] {
    require(a, "algebra");
    json o = parse_options(options_json);
    ExactLengthOptions eo;
    eo.budget = opt<std::uint64_t>(o, "budget", eo.budget);
    eo.threads = opt<unsigned>(o, "threads", 1);
    eo.span = span_options(o);
    const Algebra& alg = a->algebra;
    ExactLength r = exact_algebra_length(alg, eo);
    json j{{"command", "exact-length"},
           {"algebra", algebra_json(alg)},
           {"length", r.length},
           {"witness", set_json(r.witness, alg)},
           {"witness_sequence", diff_json(r.witness_sequence)},
           {"subspaces_examined", r.subspaces_examined},
           {"generating_subspaces", r.generating_subspaces}};
    emit(j, report_json);
  });
}

int nalen_bounds(const nalen_algebra* a, const char* options_json, char** report_json) {
  return guarded([&] {
    require(a, "algebra");
    json o = parse_options(options_json);
    const Algebra& alg = a->algebra;
    IdentityOptions io = identity_options(o);
    ClassificationReport cr = classify(alg, io);

    LengthData ld;
    const SpanOptions so = span_options(o);
    auto add_set = [&](std::string name, GeneratorSet s) {
      DiffSequence d = diff_sequence(alg, s, SpanMode::general, so);
      ld.sets.push_back({std::move(name), std::move(s), d});
    };
    if (o.contains("set") || o.contains("set_vectors")) {
      add_set("S", generator_set(alg, o));
    } else {
      add_set("basis", all_basis_generators(alg));
      if (alg.dim() <= 8)
        for (std::size_t i = 0; i < alg.dim(); ++i)
          for (std::size_t j = i; j < alg.dim(); ++j) {
            std::vector<std::size_t> idx{i};
            if (j != i) idx.push_back(j);
            add_set("{" + alg.label(i) + (j != i ? ", " + alg.label(j) : "") + "}", basis_generators(alg, idx));
          }
    }
    json exact = nullptr;
    if (alg.field().is_prime()) {
      ExactLengthOptions eo;
      eo.budget = opt<std::uint64_t>(o, "budget", eo.budget);
      eo.threads = io.threads;
      eo.span = so;
      if (subspace_count(alg.field().modulus(), alg.dim(), alg.unital()) <= eo.budget) {
        ExactLength el = exact_algebra_length(alg, eo);
        ld.algebra_length = el.length;
        exact = el.length;
      }
    }
    BoundReport br = audit(alg, cr, ld);
    json entries = json::array();
    for (const auto& e : br.entries) {
      json in = json::object();
      for (const auto& [k, v] : e.inputs) in[k] = v;
      entries.push_back(json{{"name", e.name},
                             {"subject", e.subject},
                             {"inputs", in},
                             {"inequality", e.inequality},
                             {"observed", e.observed},
                             {"pass", e.pass},
                             {"equality", e.equality}});
    }
    json sets = json::array();
    for (const auto& s : ld.sets) sets.push_back(json{{"name", s.name}, {"sequence", diff_json(s.sequence)}});
    json j{{"command", "bounds"},
           {"algebra", algebra_json(alg)},
           {"dim_minus_d0", alg.dim() - alg.d0()},
           {"descendingly_flexible", to_string(cr.descendingly_flexible.kind)},
           {"descendingly_alternative", to_string(cr.descendingly_alternative.kind)},
           {"algebra_length", exact},
           {"sets", sets},
           {"entries", entries},
           {"passed", br.passed()}};
    if (entries.empty()) j["note"] = "no descending class holds, so no bound applies";
    emit(j, report_json);
  });
}

int nalen_canonical(const nalen_algebra* a, const char* options_json, char** report_json) {
  return guarded([&] {
    json o = parse_options(options_json);
    std::string text = opt<std::string>(o, "word", "");
    if (text.empty()) fail(ErrorCode::invalid_argument, "no word given");
    std::string variant = opt<std::string>(o, "variant", "alt");
    if (variant != "alt" && variant != "flex") fail(ErrorCode::invalid_argument, "variant must be alt or flex");
    Word w = parse_word(text);
    std::optional<GeneratorSet> s;
    std::vector<std::string> names;
    if (a) {
      s = generator_set(a->algebra, o);
      for (auto l : w.letters())
        if (l >= s->size())
          fail(ErrorCode::index_out_of_range, "letter " + std::to_string(l + 1) + " outside the generator set");
      for (std::size_t i = 0; i < s->size(); ++i) names.push_back(s->name(i));
    }
    CanonicalWord c = variant == "alt" ? canonical_alt_form(w) : canonical_flex_form(w);
    json j{{"command", "canonical"}, {"input", names.empty() ? w.to_string() : w.to_string(names)}};
    j["canonical"] = canonical_json(c, names);
    if (a) j["verified"] = verify_equivalence(a->algebra, *s, w, c);
    emit(j, report_json);
  });
}

int nalen_search(const nalen_algebra* a, const char* options_json, char** report_json) {
  return guarded([&] {
    require(a, "algebra");
    json o = parse_options(options_json);
    const Algebra& alg = a->algebra;
    const std::uint64_t seed = opt<std::uint64_t>(o, "seed", 0);
    const std::size_t trials = opt<std::size_t>(o, "trials", opt<std::size_t>(o, "samples", 64));
    const std::size_t size = opt<std::size_t>(o, "size", 2);
    const unsigned threads = opt<unsigned>(o, "threads", 1);
    const SpanOptions so = span_options(o);
    if (size == 0) fail(ErrorCode::invalid_argument, "set size must be positive");
    std::vector<GeneratorSet> sets(trials);
    std::vector<DiffSequence> seqs(trials);
    parallel_for(trials, threads, [&](std::size_t i) {
      std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5ea7u,
                       static_cast<std::uint32_t>(i)};
      std::mt19937_64 gen(sq);
      GeneratorSet s;
      for (std::size_t k = 0; k < size; ++k) {
        s.elements.push_back(random_element(alg, gen));
        s.labels.push_back("s" + std::to_string(k + 1));
      }
      seqs[i] = diff_sequence(alg, s, SpanMode::general, so);
      sets[i] = std::move(s);
    });
    std::optional<std::size_t> best;
    std::size_t generating = 0;
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t i = 0; i < trials; ++i) {
      if (!seqs[i].generating) continue;
      ++generating;
      ++histogram[seqs[i].length];
      if (!best || seqs[i].length > seqs[*best].length) best = i;
    }
    json hist = json::object();
    for (auto [l, n] : histogram) hist[std::to_string(l)] = n;
    json j{{"command", "search"}, {"algebra", algebra_json(alg)}, {"seed", seed}, {"trials", trials},
           {"set_size", size},    {"generating", generating},    {"length_histogram", hist}};
    if (best) {
      j["lower_bound"] = seqs[*best].length;
      j["best_trial"] = *best;
      j["best_set"] = set_json(sets[*best], alg);
      j["best_sequence"] = diff_json(seqs[*best]);
    } else {
      j["lower_bound"] = nullptr;
    }
    emit(j, report_json);
  });
}

int nalen_infer_unity(const nalen_algebra* a, char** report_json) {
  return guarded([&] {
    require(a, "algebra");
    const Algebra& alg = a->algebra;
    auto e = infer_unity(alg);
    json j{{"command", "infer-unity"}, {"algebra", algebra_json(alg)}};
    if (e) {
      j["unity"] = element_json(*e, alg.labels());
      if (alg.unital()) j["matches_declared"] = *e == *alg.unity();
    } else {
      j["unity"] = nullptr;
    }
    emit(j, report_json);
  });
}

int nalen_formula(const char* name, uint64_t n, uint64_t k, uint64_t* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output pointer");
    std::string s = name;
    if (s == "alt_min_dim") *out = alt_min_dim(n);
    else if (s == "alt_max_length") *out = alt_max_length(n);
    else if (s == "flex_min_dim") *out = flex_min_dim(n);
    else if (s == "flex_max_length") *out = flex_max_length(n);
    else if (s == "flex_max_length_inverse") *out = flex_max_length_inverse(n);
    else if (s == "quick_alt") *out = quick_set_bound(n, BoundClass::alt);
    else if (s == "quick_flex") *out = quick_set_bound(n, BoundClass::flex);
    else if (s == "alt_word_dim") *out = alt_word_dim_bound(n, k);
    else fail(ErrorCode::invalid_argument, "unknown formula '" + s + "'");
  });
}

}  // extern "C"
