#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "nalen/error.hpp"

namespace nalen {

enum class FieldKind { rationals, prime_field };

// Either Q or GF(p). Moduli are limited to p < 2^32 so residue products fit in 64 bits.
class FieldSpec {
 public:
  FieldSpec() = default;
  static FieldSpec rationals();
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_rational() const { return kind_ == FieldKind::rationals; }
  bool is_prime() const { return kind_ == FieldKind::prime_field; }
  std::uint64_t characteristic() const { return modulus_; }
  bool char_two() const { return is_prime() && modulus_ == 2; }

  // "rational" or "gf 5"
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t modulus_ = 0;
};

bool is_prime_number(std::uint64_t n);

class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), value_(mpq_class(0)) {}
  Scalar(const FieldSpec& field, long long v);
  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);
  static Scalar from_residue(const FieldSpec& f, std::uint64_t r);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Valid only for the matching field kind.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

enum class ScalarOp { add, sub, mul, div, neg, inv };

Scalar scalar_arith(ScalarOp op, const Scalar& a, const std::optional<Scalar>& b = std::nullopt);

// Accepts "a", "-a", "a/b", "-a/b" (ASCII '-' or U+2212).
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

}  // namespace nalen
