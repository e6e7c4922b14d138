#include "nalen/algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace nalen {

Element::Element(const FieldSpec& field, std::size_t dim)
    : field_(field), coords_(dim, Scalar::zero(field)) {}

Element::Element(const FieldSpec& field, std::vector<Scalar> coords)
    : field_(field), coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (!(c.field() == field_)) fail(ErrorCode::field_mismatch, "coordinate over " + c.field().name());
}

Element Element::basis(const FieldSpec& field, std::size_t dim, std::size_t index) {
  if (index >= dim) fail(ErrorCode::index_out_of_range, "basis index " + std::to_string(index + 1));
  Element e(field, dim);
  e.coords_[index] = Scalar::one(field);
  return e;
}

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void Element::check(const Element& o) const {
  if (!(field_ == o.field_)) fail(ErrorCode::field_mismatch, "elements over different fields");
  if (coords_.size() != o.coords_.size())
    fail(ErrorCode::dimension_mismatch, "dimensions " + std::to_string(coords_.size()) + " and " +
                                            std::to_string(o.coords_.size()));
}

Element& Element::operator+=(const Element& o) {
  check(o);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!o.coords_[i].is_zero()) coords_[i] += o.coords_[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check(o);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!o.coords_[i].is_zero()) coords_[i] -= o.coords_[i];
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  for (auto& x : coords_)
    if (!x.is_zero()) x *= c;
  return *this;
}

Element Element::operator-() const {
  Element r(*this);
  for (auto& x : r.coords_) x = -x;
  return r;
}

bool operator==(const Element& a, const Element& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

std::string Element::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].to_string();
  }
  return s + ")";
}

std::string Element::to_expression(const std::vector<std::string>& labels) const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Scalar& c = coords_[i];
    if (c.is_zero()) continue;
    std::string name = i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
    std::string mag = c.to_string();
    bool neg = !mag.empty() && mag[0] == '-' && field_.is_rational();
    if (neg) mag.erase(0, 1);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (mag != "1") s += mag + " ";
    s += name;
  }
  return s.empty() ? "0" : s;
}

Algebra::Algebra(FieldSpec field, std::size_t dim, const std::vector<StructureConstant>& entries,
                 std::optional<Element> unity, std::vector<std::string> labels)
    : field_(field), dim_(dim), table_(dim * dim), unity_(std::move(unity)), labels_(std::move(labels)) {
  if (dim == 0) fail(ErrorCode::domain_error, "dimension must be positive");
  if (!labels_.empty() && labels_.size() != dim)
    fail(ErrorCode::dimension_mismatch, "expected " + std::to_string(dim) + " labels");
  if (unity_) {
    if (unity_->size() != dim) fail(ErrorCode::dimension_mismatch, "unity has wrong dimension");
    if (!(unity_->field() == field)) fail(ErrorCode::field_mismatch, "unity over a different field");
  }
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> acc;
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim)
      fail(ErrorCode::index_out_of_range, "structure constant index outside [1, " + std::to_string(dim) + "]");
    if (!(e.c.field() == field)) fail(ErrorCode::field_mismatch, "structure constant over " + e.c.field().name());
    auto [it, fresh] = acc.try_emplace({e.i, e.j, e.k}, e.c);
    if (!fresh) it->second += e.c;
  }
  for (const auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    auto [i, j, k] = key;
    table_[i * dim + j].push_back({k, c});
  }
}

std::string Algebra::label(std::size_t i) const {
  return i < labels_.size() ? labels_[i] : "e" + std::to_string(i + 1);
}

std::vector<StructureConstant> Algebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product_terms(i, j)) out.push_back({i, j, t.k, t.c});
  return out;
}

Element Algebra::basis(std::size_t i) const { return Element::basis(field_, dim_, i); }

Element Algebra::multiply(const Element& a, const Element& b) const {
  if (a.size() != dim_ || b.size() != dim_)
    fail(ErrorCode::dimension_mismatch, "operand dimension differs from algebra dimension " + std::to_string(dim_));
  if (!(a.field() == field_) || !(b.field() == field_)) fail(ErrorCode::field_mismatch, "operand over another field");
  Element r(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const auto& terms = table_[i * dim_ + j];
      if (terms.empty()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& t : terms) r[t.k] += ab * t.c;
    }
  }
  return r;
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (!(a.field_ == b.field_) || a.dim_ != b.dim_ || a.unity_ != b.unity_ || a.labels_ != b.labels_) return false;
  for (std::size_t x = 0; x < a.table_.size(); ++x) {
    const auto& p = a.table_[x];
    const auto& q = b.table_[x];
    if (p.size() != q.size()) return false;
    for (std::size_t t = 0; t < p.size(); ++t)
      if (p[t].k != q[t].k || !(p[t].c == q[t].c)) return false;
  }
  return true;
}

UnityCheck verify_unity(const Algebra& a) {
  UnityCheck out;
  if (!a.unital()) return out;
  const Element& e = *a.unity();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Element b = a.basis(i);
    if (!(a.multiply(e, b) == b) || !(a.multiply(b, e) == b)) {
      out.status = UnityStatus::fails;
      out.witness = i;
      return out;
    }
  }
  out.status = UnityStatus::holds;
  return out;
}

}  // namespace nalen
