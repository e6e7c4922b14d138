#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nalen/algebra.hpp"
#include "nalen/words.hpp"

namespace nalen {

// Reduced row-echelon basis of a subspace of F^n.
class SpanBasis {
 public:
  SpanBasis() = default;
  SpanBasis(const FieldSpec& field, std::size_t dim);

  // Adds v if it lies outside the span; returns whether it was added.
  bool insert(const Element& v);
  Element reduce(const Element& v) const;
  bool contains(const Element& v) const { return reduce(v).is_zero(); }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Element>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const SpanBasis& a, const SpanBasis& b);

 private:
  void check(const Element& v) const;

  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<Element> rows_;
  std::vector<std::size_t> pivots_;
};

SpanBasis span_of(const FieldSpec& field, std::size_t dim, const std::vector<Element>& vs);

enum class SpanMode { general, mixing };
enum class Stabilization { mixing_criterion, closure_criterion };

const char* to_string(SpanMode m);
const char* to_string(Stabilization s);

struct SpanOptions {
  std::size_t max_level = 256;  // general-mode cap
};

// Incremental Lin_0 ⊆ Lin_1 ⊆ ... of a generator set.
class SpanEngine {
 public:
  SpanEngine(const Algebra& a, const GeneratorSet& s, SpanMode mode);

  std::size_t level() const { return level_; }
  const SpanBasis& span() const { return span_; }
  // raw products added at each level; together a basis of span()
  const std::vector<Element>& new_part(std::size_t k) const { return new_parts_[k]; }
  const std::vector<std::size_t>& differences() const { return d_; }

  // computes the next level and returns its d
  std::size_t step();
  // V * V ⊆ V for the current span
  bool closed() const;

 private:
  const Algebra& a_;
  SpanMode mode_;
  std::vector<Element> generators_;
  SpanBasis span_;
  std::vector<std::vector<Element>> new_parts_;
  std::vector<std::size_t> d_;
  std::size_t level_ = 0;
};

struct DiffSequence {
  std::vector<std::size_t> d;  // d_0 .. d_l
  std::size_t length = 0;
  Stabilization stabilized_by = Stabilization::closure_criterion;
  bool generating = false;
  std::size_t levels_computed = 0;
  std::size_t span_dim = 0;
};

DiffSequence diff_sequence(const Algebra& a, const GeneratorSet& s, SpanMode mode,
                           const SpanOptions& opts = {});
std::size_t length_of_set(const Algebra& a, const GeneratorSet& s, SpanMode mode = SpanMode::general,
                          const SpanOptions& opts = {});

// Subspaces of GF(p)^n as RREF bases: by rank, then pivot set, then free entries.
class SubspaceStream {
 public:
  SubspaceStream(const FieldSpec& field, std::size_t n, std::optional<Element> must_contain = std::nullopt);
  std::optional<SpanBasis> next();

 private:
  bool next_raw();
  bool first_pivots(std::size_t r);
  bool advance_pivots();
  SpanBasis build() const;

  FieldSpec field_;
  std::size_t n_;
  std::optional<Element> must_contain_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;  // (row, column)
  std::vector<std::uint64_t> values_;
  bool started_ = false, done_ = false;
};

// number of subspaces of GF(p)^n (containing a fixed nonzero vector when flagged), saturating
std::uint64_t subspace_count(std::uint64_t p, std::size_t n, bool containing_vector = false);
std::uint64_t gaussian_binomial(std::uint64_t p, std::size_t n, std::size_t k);

std::vector<SpanBasis> enumerate_subspaces(const FieldSpec& field, std::size_t n,
                                           const std::optional<Element>& must_contain = std::nullopt,
                                           std::uint64_t budget = 1'000'000);

struct ExactLengthOptions {
  std::uint64_t budget = 1'000'000;  // subspaces
  unsigned threads = 1;
  SpanOptions span;
};

struct ExactLength {
  std::size_t length = 0;
  GeneratorSet witness;
  DiffSequence witness_sequence;
  std::uint64_t subspaces_examined = 0;
  std::uint64_t generating_subspaces = 0;
};

ExactLength exact_algebra_length(const Algebra& a, const ExactLengthOptions& opts = {});

// A two-sided identity if one exists (solves the linear system e * b_i = b_i = b_i * e).
std::optional<Element> infer_unity(const Algebra& a);

}  // namespace nalen
