#include "nalg/scalar.hpp"

#include <charconv>
#include <ostream>

namespace nalg {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base = mod(base, p);
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::int64_t mpz_mod(const mpz_class& z, std::int64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

} // namespace

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldDesc FieldDesc::prime(std::int64_t p) {
  if (p == 2)
    throw FieldError("characteristic 2 is not supported");
  if (p < 3 || p >= (std::int64_t{1} << 31) || !is_prime_number(p))
    throw FieldError("field modulus must be an odd prime below 2^31, got " +
                     std::to_string(p));
  FieldDesc f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

FieldDesc FieldDesc::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rational();
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw ParseError("malformed field modulus: " + std::string(text));
    return prime(p);
  }
  throw ParseError("unknown field '" + std::string(text) +
                   "' (expected rational or prime:P)");
}

std::string FieldDesc::to_string() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(p_);
}

Scalar::Scalar(const FieldDesc& field, std::int64_t value) : field_(field) {
  if (field.is_prime())
    value_ = mod(value, field.p());
  else
    value_ = mpq_class(static_cast<long>(value));
}

Scalar::Scalar(const FieldDesc& field, std::int64_t num, std::int64_t den)
    : field_(field) {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (field.is_prime()) {
    std::int64_t d = mod(den, field.p());
    if (d == 0) throw DivisionByZero("denominator divisible by p");
    value_ = mod(num, field.p()) * pow_mod(d, field.p() - 2, field.p()) % field.p();
  } else {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    value_ = std::move(q);
  }
}

Scalar Scalar::from_mpq(const FieldDesc& field, const mpq_class& q) {
  Scalar s;
  s.field_ = field;
  if (field.is_prime()) {
    std::int64_t d = mpz_mod(q.get_den(), field.p());
    if (d == 0) throw DivisionByZero("denominator divisible by p");
    s.value_ = mpz_mod(q.get_num(), field.p()) *
               pow_mod(d, field.p() - 2, field.p()) % field.p();
  } else {
    mpq_class c(q);
    c.canonicalize();
    s.value_ = std::move(c);
  }
  return s;
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return residue() == 0;
  return sgn(rational()) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return residue() == 1;
  return rational() == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldError("scalar field mismatch: " + field_.to_string() + " vs " +
                     o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r(*this);
  if (field_.is_prime()) {
    std::int64_t v = residue() + o.residue();
    if (v >= field_.p()) v -= field_.p();
    r.value_ = v;
  } else {
    r.value_ = mpq_class(rational() + o.rational());
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r(*this);
  if (field_.is_prime()) {
    std::int64_t v = residue() - o.residue();
    if (v < 0) v += field_.p();
    r.value_ = v;
  } else {
    r.value_ = mpq_class(rational() - o.rational());
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r(*this);
  if (field_.is_prime())
    r.value_ = residue() * o.residue() % field_.p();
  else
    r.value_ = mpq_class(rational() * o.rational());
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_prime())
    r.value_ = residue() == 0 ? 0 : field_.p() - residue();
  else
    r.value_ = mpq_class(-rational());
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r(*this);
  if (field_.is_prime())
    r.value_ = pow_mod(residue(), field_.p() - 2, field_.p());
  else
    r.value_ = mpq_class(1 / rational());
  return r;
}

int Scalar::sign() const {
  if (!field_.is_rational()) throw FieldError("sign is defined over Q only");
  return sgn(rational());
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  if (field_.is_prime()) return residue() == o.residue();
  return rational() == o.rational();
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue());
  return rational().get_str();
}

Scalar parse_scalar(std::string_view text, const FieldDesc& field) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body, den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den))
      throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  if (!all_digits(num))
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  if (field.is_prime() && mpz_mod(d, field.p()) == 0)
    throw ParseError("denominator of '" + std::string(text) +
                     "' vanishes mod " + std::to_string(field.p()));
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar::from_mpq(field, q);
}

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
  if (a.field().is_prime()) return a.residue() <=> b.residue();
  int c = cmp(a.rational(), b.rational());
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

bool is_square_mod_p(const Scalar& s) {
  if (!s.field().is_prime()) throw FieldError("square test requires F_p");
  if (s.is_zero()) return true;
  std::int64_t p = s.field().p();
  return pow_mod(s.residue(), (p - 1) / 2, p) == 1;
}

Scalar sqrt_mod_p(const Scalar& s) {
  if (!is_square_mod_p(s)) throw FieldError(s.to_string() + " is not a square");
  const std::int64_t p = s.field().p();
  const std::int64_t a = s.residue();
  if (a == 0) return s;
  std::int64_t root;
  if (p % 4 == 3) {
    root = pow_mod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks
    std::int64_t q = p - 1, e = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++e;
    }
    std::int64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::int64_t m = e, c = pow_mod(z, q, p), t = pow_mod(a, q, p);
    root = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      std::int64_t i = 0, t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        ++i;
      }
      std::int64_t b = c;
      for (std::int64_t k = 0; k < m - i - 1; ++k) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      root = root * b % p;
    }
  }
  return Scalar(s.field(), std::min(root, p - root));
}

mpz_class height(const Scalar& s) {
  if (!s.field().is_rational()) throw FieldError("height is defined over Q only");
  mpz_class n = abs(s.rational().get_num());
  const mpz_class& d = s.rational().get_den();
  return n > d ? n : d;
}

} // namespace nalg
