#pragma once

// Exact scalars over Q (arbitrary precision) and F_p (p an odd prime).

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace nalg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class FieldError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// Base field descriptor. Characteristic 2 is rejected at construction.
class FieldDesc {
public:
  enum class Kind { Rational, Prime };

  static FieldDesc rational() { return FieldDesc{}; }
  /// Throws FieldError unless p is an odd prime below 2^31.
  static FieldDesc prime(std::int64_t p);
  /// Accepts "rational" or "prime:P".
  static FieldDesc parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  /// Characteristic; 0 for Q.
  std::int64_t p() const { return p_; }

  std::string to_string() const;

  bool operator==(const FieldDesc&) const = default;

private:
  FieldDesc() = default;
  Kind kind_ = Kind::Rational;
  std::int64_t p_ = 0;
};

bool is_prime_number(std::int64_t n);

/// An exact field element in canonical form: reduced fraction with positive
/// denominator over Q, residue in [0, p) over F_p. Equality is representation
/// equality.
class Scalar {
public:
  /// Zero of the rationals.
  Scalar() : field_(FieldDesc::rational()), value_(mpq_class(0)) {}
  Scalar(const FieldDesc& field, std::int64_t value);
  Scalar(const FieldDesc& field, std::int64_t num, std::int64_t den);
  static Scalar from_mpq(const FieldDesc& field, const mpq_class& q);

  static Scalar zero(const FieldDesc& field) { return Scalar(field, 0); }
  static Scalar one(const FieldDesc& field) { return Scalar(field, 1); }

  const FieldDesc& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p). Prime fields only.
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  /// Canonical fraction. Rational field only.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Throws DivisionByZero on zero.
  Scalar inverse() const;

  /// Sign of the rational value (-1, 0, 1). Rational field only.
  int sign() const;

  bool operator==(const Scalar& o) const;

  /// Canonical text: "-3/4", "0", "5".
  std::string to_string() const;

private:
  void check_same(const Scalar& o) const;

  FieldDesc field_;
  std::variant<std::int64_t, mpq_class> value_;
};

/// Parses `-? digits ( '/' digits )?` into a canonical scalar of the given
/// field. Throws ParseError on malformed text or a zero denominator (mod p
/// included).
Scalar parse_scalar(std::string_view text, const FieldDesc& field);

/// Exact inverse; same as s.inverse().
inline Scalar invert(const Scalar& s) { return s.inverse(); }

/// Total order on canonical representations; used for deterministic tie
/// breaking, not an ordering of the field.
std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Legendre-style square test over F_p (0 counts as a square).
bool is_square_mod_p(const Scalar& s);
/// A square root over F_p with the smaller residue of the two; throws
/// FieldError when s is not a square.
Scalar sqrt_mod_p(const Scalar& s);

/// Height max(|num|, den) of a rational scalar.
mpz_class height(const Scalar& s);

} // namespace nalg
