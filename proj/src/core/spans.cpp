#include "nalen/spans.hpp"

#include <algorithm>

#include "nalen/parallel.hpp"

namespace nalen {

SpanBasis::SpanBasis(const FieldSpec& field, std::size_t dim) : field_(field), dim_(dim) {}

void SpanBasis::check(const Element& v) const {
  if (v.size() != dim_)
    fail(ErrorCode::dimension_mismatch, "vector of dimension " + std::to_string(v.size()) + " in a span of F^" +
                                            std::to_string(dim_));
  if (!(v.field() == field_)) fail(ErrorCode::field_mismatch, "vector over " + v.field().name());
}

Element SpanBasis::reduce(const Element& v) const {
  check(v);
  Element r(v);
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    Scalar c = r[pivots_[t]];
    if (c.is_zero()) continue;
    const Element& row = rows_[t];
    for (std::size_t j = pivots_[t]; j < dim_; ++j)
      if (!row[j].is_zero()) r[j] -= c * row[j];
  }
  return r;
}

bool SpanBasis::insert(const Element& v) {
  Element r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = r[p].inverse();
  r *= inv;
  for (auto& row : rows_) {
    Scalar c = row[p];
    if (c.is_zero()) continue;
    for (std::size_t j = p; j < dim_; ++j)
      if (!r[j].is_zero()) row[j] -= c * r[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

bool operator==(const SpanBasis& a, const SpanBasis& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

SpanBasis span_of(const FieldSpec& field, std::size_t dim, const std::vector<Element>& vs) {
  SpanBasis b(field, dim);
  for (const auto& v : vs) b.insert(v);
  return b;
}

const char* to_string(SpanMode m) { return m == SpanMode::general ? "general" : "mixing"; }

const char* to_string(Stabilization s) {
  return s == Stabilization::mixing_criterion ? "mixing-criterion" : "closure-criterion";
}

SpanEngine::SpanEngine(const Algebra& a, const GeneratorSet& s, SpanMode mode)
    : a_(a), mode_(mode), generators_(s.elements), span_(a.field(), a.dim()) {
  for (const auto& x : s.elements) {
    if (x.size() != a.dim()) fail(ErrorCode::dimension_mismatch, "generator of dimension " + std::to_string(x.size()));
    if (!(x.field() == a.field())) fail(ErrorCode::field_mismatch, "generator over " + x.field().name());
  }
  new_parts_.emplace_back();
  if (a.unital() && span_.insert(*a.unity())) new_parts_[0].push_back(*a.unity());
  d_.push_back(new_parts_[0].size());
}

std::size_t SpanEngine::step() {
  std::size_t m = ++level_;
  std::vector<Element> added;
  auto offer = [&](Element p) {
    if (span_.insert(p)) added.push_back(std::move(p));
  };
  if (m == 1) {
    for (const auto& x : generators_) offer(x);
  } else if (mode_ == SpanMode::general) {
    for (std::size_t i = 1; i < m; ++i)
      for (const auto& u : new_parts_[i])
        for (const auto& v : new_parts_[m - i]) offer(a_.multiply(u, v));
  } else {
    for (const auto& u : new_parts_[m - 1])
      for (const auto& x : new_parts_[1]) {
        offer(a_.multiply(u, x));
        offer(a_.multiply(x, u));
      }
  }
  new_parts_.push_back(std::move(added));
  d_.push_back(new_parts_.back().size());
  return d_.back();
}

bool SpanEngine::closed() const {
  if (span_.rank() == span_.dim()) return true;
  // products of levels i + j <= level already lie in the span
  for (std::size_t i = 1; i <= level_; ++i)
    for (std::size_t j = 1; j <= level_; ++j) {
      if (i + j <= level_) continue;
      for (const auto& u : new_parts_[i])
        for (const auto& v : new_parts_[j])
          if (!span_.contains(a_.multiply(u, v))) return false;
    }
  return true;
}

DiffSequence diff_sequence(const Algebra& a, const GeneratorSet& s, SpanMode mode, const SpanOptions& opts) {
  SpanEngine eng(a, s, mode);
  eng.step();
  DiffSequence out;
  for (;;) {
    if (mode == SpanMode::general) {
      if (eng.closed()) {
        out.stabilized_by = Stabilization::closure_criterion;
        break;
      }
      if (eng.level() >= opts.max_level)
        fail(ErrorCode::resource_limit, "span did not stabilize within " + std::to_string(opts.max_level) + " levels");
    } else {
      if (eng.differences().back() == 0 || eng.span().rank() == a.dim()) {
        out.stabilized_by = Stabilization::mixing_criterion;
        break;
      }
      if (eng.level() > a.dim() + 1)
        fail(ErrorCode::resource_limit, "mixing-mode run exceeded dim + 1 steps; the algebra is not mixing");
    }
    eng.step();
  }

  // d_1 = rank(S) or rank(S ∪ {e}) - 1
  SpanBasis first(a.field(), a.dim());
  if (a.unital()) first.insert(*a.unity());
  for (const auto& x : s.elements) first.insert(x);
  if (first.rank() - a.d0() != eng.differences()[1])
    fail(ErrorCode::internal_consistency, "d_1 differs from the rank of the generator set");

  const auto& d = eng.differences();
  std::size_t l = 0;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 0) l = k;
  out.d.assign(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(l) + 1);
  out.length = l;
  out.levels_computed = eng.level();
  out.span_dim = eng.span().rank();
  out.generating = out.span_dim == a.dim();
  return out;
}

std::size_t length_of_set(const Algebra& a, const GeneratorSet& s, SpanMode mode, const SpanOptions& opts) {
  return diff_sequence(a, s, mode, opts).length;
}

namespace {

std::uint64_t clamp(unsigned __int128 v) { return v > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(v); }

}  // namespace

std::uint64_t gaussian_binomial(std::uint64_t p, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // row-by-row recurrence [n,k] = [n-1,k-1] + p^k [n-1,k]
  std::vector<std::uint64_t> row(1, 1);
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1, 0);
    unsigned __int128 pk = 1;
    for (std::size_t j = 0; j <= m; ++j) {
      unsigned __int128 v = 0;
      if (j >= 1) v += row[j - 1];
      if (j < m) v += pk * row[j];
      next[j] = clamp(v);
      pk = std::min<unsigned __int128>(pk * p, UINT64_MAX);
    }
    row = std::move(next);
  }
  return row[k];
}

std::uint64_t subspace_count(std::uint64_t p, std::size_t n, bool containing_vector) {
  std::size_t m = containing_vector ? n - 1 : n;
  unsigned __int128 total = 0;
  for (std::size_t k = 0; k <= m; ++k) total += gaussian_binomial(p, m, k);
  return clamp(total);
}

SubspaceStream::SubspaceStream(const FieldSpec& field, std::size_t n, std::optional<Element> must_contain)
    : field_(field), n_(n), must_contain_(std::move(must_contain)) {
  if (!field.is_prime()) fail(ErrorCode::not_finite_field, "subspace enumeration needs a prime field");
  if (must_contain_ && must_contain_->size() != n) fail(ErrorCode::dimension_mismatch, "vector to contain");
}

bool SubspaceStream::first_pivots(std::size_t r) {
  if (r > n_) return false;
  rank_ = r;
  pivots_.resize(r);
  for (std::size_t i = 0; i < r; ++i) pivots_[i] = i;
  return true;
}

bool SubspaceStream::advance_pivots() {
  // next r-combination of {0..n-1} in lexicographic order
  std::size_t r = rank_;
  for (std::size_t i = r; i-- > 0;) {
    if (pivots_[i] < n_ - r + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < r; ++j) pivots_[j] = pivots_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool SubspaceStream::next_raw() {
  auto setup_free = [&] {
    free_.clear();
    for (std::size_t t = 0; t < rank_; ++t)
      for (std::size_t c = pivots_[t] + 1; c < n_; ++c)
        if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_.push_back({t, c});
    values_.assign(free_.size(), 0);
  };
  if (!started_) {
    started_ = true;
    first_pivots(0);
    setup_free();
    return true;
  }
  const std::uint64_t p = field_.modulus();
  for (std::size_t i = values_.size(); i-- > 0;) {
    if (++values_[i] < p) return true;
    values_[i] = 0;
  }
  if (advance_pivots() || first_pivots(rank_ + 1)) {
    setup_free();
    return true;
  }
  return false;
}

SpanBasis SubspaceStream::build() const {
  SpanBasis b(field_, n_);
  std::vector<Element> rows(rank_, Element(field_, n_));
  for (std::size_t t = 0; t < rank_; ++t) rows[t][pivots_[t]] = Scalar::one(field_);
  for (std::size_t f = 0; f < free_.size(); ++f)
    rows[free_[f].first][free_[f].second] = Scalar::from_residue(field_, values_[f]);
  for (const auto& r : rows) b.insert(r);
  return b;
}

std::optional<SpanBasis> SubspaceStream::next() {
  if (done_) return std::nullopt;
  const std::uint64_t p = field_.modulus();
  while (next_raw()) {
    if (must_contain_) {
      // v lies in the row space iff v = sum_t v[pivot_t] * row_t
      std::vector<std::uint64_t> acc(n_, 0);
      for (std::size_t t = 0; t < rank_; ++t) acc[pivots_[t]] = (*must_contain_)[pivots_[t]].residue();
      for (std::size_t f = 0; f < free_.size(); ++f) {
        auto [t, c] = free_[f];
        acc[c] = (acc[c] + (*must_contain_)[pivots_[t]].residue() * values_[f]) % p;
      }
      bool ok = true;
      for (std::size_t c = 0; c < n_ && ok; ++c) ok = acc[c] == (*must_contain_)[c].residue();
      if (!ok) continue;
    }
    return build();
  }
  done_ = true;
  return std::nullopt;
}

std::vector<SpanBasis> enumerate_subspaces(const FieldSpec& field, std::size_t n,
                                           const std::optional<Element>& must_contain, std::uint64_t budget) {
  if (!field.is_prime()) fail(ErrorCode::not_finite_field, "subspace enumeration needs a prime field");
  bool containing = must_contain && !must_contain->is_zero();
  std::uint64_t count = subspace_count(field.modulus(), n, containing);
  if (count > budget)
    fail(ErrorCode::resource_limit, std::to_string(count) + " subspaces exceed the budget of " + std::to_string(budget));
  SubspaceStream s(field, n, must_contain);
  std::vector<SpanBasis> out;
  while (auto b = s.next()) out.push_back(std::move(*b));
  return out;
}

ExactLength exact_algebra_length(const Algebra& a, const ExactLengthOptions& opts) {
  if (!a.field().is_prime()) fail(ErrorCode::not_finite_field, "exact length needs a prime field");
  std::optional<Element> e = a.unity();
  std::uint64_t count = subspace_count(a.field().modulus(), a.dim(), e.has_value());
  if (count > opts.budget)
    fail(ErrorCode::resource_limit,
         std::to_string(count) + " candidate subspaces exceed the budget of " + std::to_string(opts.budget));

  ExactLength out;
  std::optional<std::size_t> best_len;
  SubspaceStream stream(a.field(), a.dim(), e);
  constexpr std::size_t batch = 2048;
  for (;;) {
    std::vector<SpanBasis> chunk;
    while (chunk.size() < batch) {
      auto b = stream.next();
      if (!b) break;
      chunk.push_back(std::move(*b));
    }
    if (chunk.empty()) break;
    std::vector<std::optional<DiffSequence>> results(chunk.size());
    parallel_for(chunk.size(), opts.threads, [&](std::size_t i) {
      GeneratorSet s;
      s.elements = chunk[i].rows();
      DiffSequence d = diff_sequence(a, s, SpanMode::general, opts.span);
      if (d.generating) results[i] = std::move(d);
    });
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      ++out.subspaces_examined;
      if (!results[i]) continue;
      ++out.generating_subspaces;
      if (!best_len || results[i]->length > *best_len) {
        best_len = results[i]->length;
        out.witness = GeneratorSet{chunk[i].rows(), {}};
        out.witness_sequence = *results[i];
      }
    }
  }
  if (!best_len) fail(ErrorCode::internal_consistency, "no generating subspace found");
  out.length = *best_len;
  return out;
}

std::optional<Element> infer_unity(const Algebra& a) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  // unknown x = sum_k x_k b_k; rows are equations sum_k x_k c = rhs, stored as n + 1 coordinates
  SpanBasis system(f, n + 1);
  auto add_equation = [&](const Element& row) {
    if (!system.insert(row)) return true;
    // an inserted pivot in the last column means 0 = 1
    return system.pivots().back() != n;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (int side = 0; side < 2; ++side) {
      std::vector<Element> eqs(n, Element(f, n + 1));
      for (std::size_t k = 0; k < n; ++k) {
        const auto& terms = side == 0 ? a.product_terms(k, i) : a.product_terms(i, k);
        for (const auto& t : terms) eqs[t.k][k] += t.c;
      }
      eqs[i][n] = Scalar::one(f);
      for (const auto& eq : eqs)
        if (!add_equation(eq)) return std::nullopt;
    }
  }
  Element x(f, n);
  for (std::size_t t = 0; t < system.rank(); ++t) x[system.pivots()[t]] = system.rows()[t][n];
  for (std::size_t i = 0; i < n; ++i) {
    Element b = a.basis(i);
    if (!(a.multiply(x, b) == b) || !(a.multiply(b, x) == b)) return std::nullopt;
  }
  return x;
}

}  // namespace nalen
