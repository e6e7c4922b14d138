#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nalen/algebra.hpp"

namespace nalen {

enum class Relation {
  flexible,                // (ab)a = a(ba)
  flexible_linearized,     // (ab)c + (cb)a = a(bc) + c(ba)
  alt_left,                // a(ab) = (aa)b
  alt_left_linearized,     // a(cb) + c(ab) = (ac)b + (ca)b
  alt_right,               // (ba)a = b(aa)
  alt_right_linearized,    // (ba)c + (bc)a = b(ac) + b(ca)
  left_sliding,            // (xy)z in Lin(Q_l(x,y,z))
  right_sliding,           // z(xy) in Lin(Q_r(x,y,z))
  mixing,                  // (xy)z, z(xy) in Lin(P(x,y,z))
  df_pair,                 // (ab)a, a(ba) in Lin_1(a,b,aa,ab,ba)
  df_triple,               // (ab)c + (cb)a, a(bc) + c(ba) in Lin'_2(a,b,c)
  da_pair,                 // (ba)a, a(ab) in Lin_1(a,b,aa,ab,ba)
  da_triple,               // (ab)c + (ac)b, a(bc) + b(ac) in Lin'_2(a,b,c)
  aa_coefficient,          // coefficient at aa depends on b only
};

const char* relation_tag(Relation r);
std::size_t relation_arity(Relation r);
std::vector<std::string> relation_argument_names(Relation r);

// A concrete violation of one relation.
struct Violation {
  std::string term;   // e.g. "a(ab)"
  std::string condition;  // e.g. "a(ab) in Lin(a, b, aa, ab, ba)"
  Element value;      // the offending element (nonzero difference or non-member)
};

// Checks one relation on given arguments; empty when it holds there.
std::optional<Violation> probe(const Algebra& a, Relation r, const std::vector<Element>& args);

enum class VerdictKind { holds_exhaustive, holds_randomized, fails, inconclusive };
const char* to_string(VerdictKind k);

struct Witness {
  Relation relation = Relation::flexible;
  std::vector<Element> arguments;
  std::string source;                       // basis, linearized-basis, all-elements, random
  std::vector<std::size_t> basis_indices;   // 0-based, for basis probes
  std::size_t sample_index = 0;             // for random probes
  Violation violation;
};

struct Verdict {
  VerdictKind kind = VerdictKind::inconclusive;
  std::size_t samples = 0;
  std::optional<Witness> witness;
  std::string reason;
  std::vector<std::string> notes;

  bool holds() const { return kind == VerdictKind::holds_exhaustive || kind == VerdictKind::holds_randomized; }
  bool fails() const { return kind == VerdictKind::fails; }
};

struct IdentityOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 64;
  unsigned threads = 1;
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 16;  // element tuples
};

Verdict check_flexible(const Algebra& a, const IdentityOptions& o = {});
Verdict check_alternative(const Algebra& a, const IdentityOptions& o = {});
Verdict check_left_sliding(const Algebra& a, const IdentityOptions& o = {});
Verdict check_right_sliding(const Algebra& a, const IdentityOptions& o = {});
Verdict check_mixing(const Algebra& a, const IdentityOptions& o = {});
Verdict check_descendingly_flexible(const Algebra& a, const IdentityOptions& o = {});
Verdict check_descendingly_alternative(const Algebra& a, const IdentityOptions& o = {});

enum class Variant { flex, alt };
const char* to_string(Variant v);

struct CoefficientRecord {
  std::size_t b_index = 0;   // which sampled b
  std::string target;        // "(ab)a" etc.
  std::optional<Scalar> coefficient;  // empty when aa lies in the span of the other terms
};

struct SufficientReport {
  Verdict verdict;
  std::size_t informative = 0;  // samples with a, b (, e) independent
  std::size_t forced = 0;       // samples where the aa-coefficient is unique
  std::vector<CoefficientRecord> records;
};

SufficientReport check_sufficient_condition(const Algebra& a, Variant v, const IdentityOptions& o = {});

// Both triple conditions of the descending variant at one argument triple.
std::optional<Violation> check_descending_at(const Algebra& a, Variant v, const Element& x, const Element& y,
                                             const Element& z);

// Re-evaluates a failure witness from scratch; true iff the violation reproduces.
bool replay_witness(const Algebra& a, const Witness& w);

struct ClassificationReport {
  FieldSpec field;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Verdict flexible, alternative, left_sliding, right_sliding, mixing;
  Verdict descendingly_flexible, descendingly_alternative;
  SufficientReport sufficient_flex, sufficient_alt;
  std::string characteristic_note;
  std::vector<std::string> inconsistencies;  // violated implications between verdicts
};

ClassificationReport classify(const Algebra& a, const IdentityOptions& o = {});

// true when mixing-mode span computation is licensed by the verdicts
bool mixing_licensed(const ClassificationReport& r);

}  // namespace nalen
