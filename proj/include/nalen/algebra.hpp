#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nalen/field.hpp"

namespace nalen {

// Coordinate vector in the algebra's basis.
class Element {
 public:
  Element() = default;
  Element(const FieldSpec& field, std::size_t dim);
  Element(const FieldSpec& field, std::vector<Scalar> coords);
  static Element basis(const FieldSpec& field, std::size_t dim, std::size_t index);

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }
  bool is_zero() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b);

  // "(1, 0, -1/2)"
  std::string to_string() const;
  // "e2 - 1/2 e5" with 1-based indices or labels
  std::string to_expression(const std::vector<std::string>& labels = {}) const;

 private:
  void check(const Element& o) const;

  FieldSpec field_;
  std::vector<Scalar> coords_;
};

struct StructureConstant {
  std::size_t i = 0;  // 0-based
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar c;
};

struct ProductTerm {
  std::size_t k = 0;
  Scalar c;
};

class Algebra {
 public:
  // Entries with the same (i, j, k) are summed; zero results dropped.
  Algebra(FieldSpec field, std::size_t dim, const std::vector<StructureConstant>& entries,
          std::optional<Element> unity = std::nullopt, std::vector<std::string> labels = {});

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  bool unital() const { return unity_.has_value(); }
  const std::optional<Element>& unity() const { return unity_; }
  std::size_t d0() const { return unital() ? 1 : 0; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;

  // b_i * b_j, 0-based, terms sorted by k
  const std::vector<ProductTerm>& product_terms(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  std::vector<StructureConstant> structure_constants() const;

  Element zero() const { return Element(field_, dim_); }
  Element basis(std::size_t i) const;
  Element multiply(const Element& a, const Element& b) const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<std::vector<ProductTerm>> table_;
  std::optional<Element> unity_;
  std::vector<std::string> labels_;
};

enum class UnityStatus { non_unital, holds, fails };

struct UnityCheck {
  UnityStatus status = UnityStatus::non_unital;
  std::optional<std::size_t> witness;  // 0-based basis index
};

UnityCheck verify_unity(const Algebra& a);

}  // namespace nalen
