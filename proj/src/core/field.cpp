#include "nalen/field.hpp"

#include <cctype>

namespace nalen {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::field_mismatch: return "FieldMismatch";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::resource_limit: return "ResourceLimit";
    case ErrorCode::not_restricted_form: return "NotRestrictedForm";
    case ErrorCode::word_too_short: return "WordTooShort";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::not_finite_field: return "NotFiniteField";
    case ErrorCode::already_unital: return "AlreadyUnital";
    case ErrorCode::internal_consistency: return "InternalConsistency";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::rationals() { return FieldSpec(); }

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) fail(ErrorCode::domain_error, "modulus too large: " + std::to_string(p));
  if (!is_prime_number(p)) fail(ErrorCode::domain_error, "modulus is not prime: " + std::to_string(p));
  FieldSpec f;
  f.kind_ = FieldKind::prime_field;
  f.modulus_ = p;
  return f;
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("rational") : "gf " + std::to_string(modulus_);
}

namespace {

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce_signed(t, p);
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, long long v) : field_(field) {
  if (field.is_rational())
    value_ = mpq_class(static_cast<long>(v));
  else
    value_ = reduce_signed(v, field.modulus());
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  Scalar s(f, 0);
  if (f.is_rational()) {
    mpq_class c(q);
    c.canonicalize();
    s.value_ = c;
    return s;
  }
  const std::uint64_t p = f.modulus();
  mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
  if (den == 0) fail(ErrorCode::division_by_zero, "denominator vanishes modulo " + std::to_string(p));
  std::uint64_t r = num.get_ui() * inverse_mod(den.get_ui(), p) % p;
  s.value_ = r;
  return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint64_t r) {
  if (!f.is_prime()) fail(ErrorCode::field_mismatch, "residue given for the rational field");
  Scalar s(f, 0);
  s.value_ = r % f.modulus();
  return s;
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(rational()) == 0;
  return residue() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return rational() == 1;
  return residue() == 1;
}

void Scalar::same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    fail(ErrorCode::field_mismatch, "operands over " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_rational())
    r.value_ = mpq_class(-rational());
  else
    r.value_ = residue() == 0 ? 0 : field_.modulus() - residue();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero");
  Scalar r(*this);
  if (field_.is_rational())
    r.value_ = mpq_class(1 / rational());
  else
    r.value_ = inverse_mod(residue(), field_.modulus());
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    std::uint64_t s = residue() + o.residue();
    if (s >= field_.modulus()) s -= field_.modulus();
    value_ = s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= o.rational();
  } else {
    std::uint64_t a = residue(), b = o.residue();
    value_ = a >= b ? a - b : a + field_.modulus() - b;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  same_field(o);
  if (field_.is_rational())
    std::get<mpq_class>(value_) *= o.rational();
  else
    value_ = residue() * o.residue() % field_.modulus();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rational().get_str();
  return std::to_string(residue());
}

Scalar scalar_arith(ScalarOp op, const Scalar& a, const std::optional<Scalar>& b) {
  auto rhs = [&]() -> const Scalar& {
    if (!b) fail(ErrorCode::invalid_argument, "binary operation needs two operands");
    return *b;
  };
  switch (op) {
    case ScalarOp::add: return a + rhs();
    case ScalarOp::sub: return a - rhs();
    case ScalarOp::mul: return a * rhs();
    case ScalarOp::div: return a / rhs();
    case ScalarOp::neg: return -a;
    case ScalarOp::inv: return a.inverse();
  }
  fail(ErrorCode::invalid_argument, "unknown scalar operation");
}

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  std::string_view t = text;
  bool negative = false;
  if (!t.empty() && t.front() == '-') {
    negative = true;
    t.remove_prefix(1);
  } else if (t.size() >= 3 && t.substr(0, 3) == "\xE2\x88\x92") {
    negative = true;
    t.remove_prefix(3);
  }
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = t, den;
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    num = t.substr(0, slash);
    den = t.substr(slash + 1);
    if (!digits(den)) fail(ErrorCode::parse_error, "malformed scalar '" + std::string(text) + "'");
  }
  if (!digits(num)) fail(ErrorCode::parse_error, "malformed scalar '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{1};
  if (!den.empty()) d = mpz_class(std::string(den));
  if (d == 0) fail(ErrorCode::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Scalar::from_rational(field, mpq_class(n, d));
}

}  // namespace nalen
