#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "nalg/scalar.hpp"

using namespace nalg;

namespace {

// Reference fractions on machine integers for small operands.
struct Frac {
  __int128 n, d;
};

Frac reduce(__int128 n, __int128 d) {
  if (d < 0) n = -n, d = -d;
  __int128 a = n < 0 ? -n : n, b = d;
  while (b) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return {n / a, d / a};
}

std::string text(const Frac& f) {
  auto str = [](__int128 v) { return std::to_string(static_cast<long long>(v)); };
  return f.d == 1 ? str(f.n) : str(f.n) + "/" + str(f.d);
}

const FieldDesc Q = FieldDesc::rational();

} // namespace

TEST(FieldDesc, RejectsCharacteristicTwoAndComposites) {
  EXPECT_THROW(FieldDesc::prime(2), FieldError);
  EXPECT_THROW(FieldDesc::prime(9), FieldError);
  EXPECT_THROW(FieldDesc::prime(1), FieldError);
  EXPECT_THROW(FieldDesc::prime(-3), FieldError);
  EXPECT_THROW(FieldDesc::prime(std::int64_t{1} << 31), FieldError);
  EXPECT_EQ(FieldDesc::prime(2147483647).p(), 2147483647);
  EXPECT_EQ(FieldDesc::parse("prime:7"), FieldDesc::prime(7));
  EXPECT_EQ(FieldDesc::parse("rational"), Q);
  EXPECT_THROW(FieldDesc::parse("prime:x"), ParseError);
  EXPECT_THROW(FieldDesc::parse("real"), ParseError);
}

TEST(Primality, MatchesTrialDivisionBelowTenThousand) {
  for (std::int64_t n = 0; n < 10000; ++n) {
    bool ref = n >= 2;
    for (std::int64_t d = 2; d * d <= n && ref; ++d) ref = n % d != 0;
    EXPECT_EQ(is_prime_number(n), ref) << n;
  }
}

TEST(ParseScalar, Examples) {
  EXPECT_EQ(parse_scalar("2/3", Q).to_string(), "2/3");
  EXPECT_EQ(parse_scalar("4/6", Q).to_string(), "2/3");
  EXPECT_EQ(parse_scalar("-4/6", Q).to_string(), "-2/3");
  EXPECT_EQ(parse_scalar("0/5", Q).to_string(), "0");
  EXPECT_EQ(parse_scalar("007", Q).to_string(), "7");
}

TEST(ParseScalar, ExamplesOverPrimeFields) {
  EXPECT_EQ(parse_scalar("5", FieldDesc::prime(3)).to_string(), "2");
  EXPECT_EQ(parse_scalar("1/2", FieldDesc::prime(5)).to_string(), "3");
  EXPECT_EQ(parse_scalar("-1", FieldDesc::prime(7)).to_string(), "6");
}

TEST(ParseScalar, Errors) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "1/-2", " 1", "+1", "1/2/3", "abc"})
    EXPECT_THROW(parse_scalar(bad, Q), ParseError) << bad;
  EXPECT_THROW(parse_scalar("1/3", FieldDesc::prime(3)), ParseError);
  EXPECT_THROW(parse_scalar("2/6", FieldDesc::prime(3)), ParseError);
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(parse_scalar("2/3", Q)).to_string(), "3/2");
  EXPECT_EQ(invert(Scalar(FieldDesc::prime(5), 2)).to_string(), "3");
  EXPECT_EQ(invert(Scalar::one(Q)), Scalar::one(Q));
  EXPECT_EQ(invert(Scalar::one(FieldDesc::prime(11))), Scalar::one(FieldDesc::prime(11)));
  EXPECT_THROW(invert(Scalar::zero(Q)), DivisionByZero);
  EXPECT_THROW(invert(Scalar::zero(FieldDesc::prime(3))), DivisionByZero);
  EXPECT_THROW(Scalar::one(Q) / Scalar::zero(Q), DivisionByZero);
}

TEST(Scalar, MixedFieldsRejected) {
  EXPECT_THROW(Scalar::one(Q) + Scalar::one(FieldDesc::prime(3)), FieldError);
  EXPECT_THROW(Scalar::one(FieldDesc::prime(5)) * Scalar::one(FieldDesc::prime(3)), FieldError);
}

TEST(Scalar, RationalArithmeticMatchesReference) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
  for (int t = 0; t < 1000; ++t) {
    const std::int64_t an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
    const Scalar a(Q, an, ad), b(Q, bn, bd);
    EXPECT_EQ((a + b).to_string(), text(reduce(__int128(an) * bd + __int128(bn) * ad, __int128(ad) * bd)));
    EXPECT_EQ((a - b).to_string(), text(reduce(__int128(an) * bd - __int128(bn) * ad, __int128(ad) * bd)));
    EXPECT_EQ((a * b).to_string(), text(reduce(__int128(an) * bn, __int128(ad) * bd)));
    if (bn != 0) EXPECT_EQ((a / b).to_string(), text(reduce(__int128(an) * bd, __int128(ad) * bn)));
  }
}

TEST(Scalar, PrimeArithmeticMatchesReference) {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {3, 5, 7, 101, 2147483647}) {
    const FieldDesc f = FieldDesc::prime(p);
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    for (int t = 0; t < 1000; ++t) {
      const std::int64_t x = d(rng), y = d(rng);
      const Scalar a(f, x), b(f, y);
      EXPECT_EQ((a + b).residue(), (x + y) % p);
      EXPECT_EQ((a - b).residue(), ((x - y) % p + p) % p);
      EXPECT_EQ((a * b).residue(), static_cast<std::int64_t>((__int128(x) * y) % p));
      if (y != 0) EXPECT_EQ(((a / b) * b).residue(), x);
    }
  }
}

TEST(Scalar, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(3);
  for (const FieldDesc& f : {Q, FieldDesc::prime(3), FieldDesc::prime(5), FieldDesc::prime(65537)}) {
    auto draw = [&]() {
      if (f.is_prime()) return Scalar(f, std::uniform_int_distribution<std::int64_t>(0, f.p() - 1)(rng));
      return Scalar(f, std::uniform_int_distribution<std::int64_t>(-50, 50)(rng),
                    std::uniform_int_distribution<std::int64_t>(1, 50)(rng));
    };
    for (int t = 0; t < 1000; ++t) {
      const Scalar a = draw(), b = draw(), c = draw();
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, Scalar::zero(f));
      if (!a.is_zero()) EXPECT_EQ(a * invert(a), Scalar::one(f));
    }
  }
}

TEST(Scalar, FormatParseRoundTrip) {
  std::mt19937_64 rng(5);
  for (const FieldDesc& f : {Q, FieldDesc::prime(3), FieldDesc::prime(1000003)}) {
    for (int t = 0; t < 1000; ++t) {
      const Scalar s = f.is_prime()
                           ? Scalar(f, std::uniform_int_distribution<std::int64_t>(-5000000, 5000000)(rng))
                           : Scalar(f, std::uniform_int_distribution<std::int64_t>(-100000, 100000)(rng),
                                    std::uniform_int_distribution<std::int64_t>(1, 100000)(rng));
      EXPECT_EQ(parse_scalar(s.to_string(), f), s);
      EXPECT_EQ(parse_scalar(s.to_string(), f).to_string(), s.to_string());
    }
  }
}

TEST(Scalar, BigRationalsStayExact) {
  Scalar x(Q, 1, 3);
  for (int i = 0; i < 200; ++i) x = x * Scalar(Q, 3, 2);
  for (int i = 0; i < 200; ++i) x = x / Scalar(Q, 3, 2);
  EXPECT_EQ(x, Scalar(Q, 1, 3));
  const Scalar big = parse_scalar("123456789012345678901234567891/10", Q);
  EXPECT_EQ(big.to_string(), "123456789012345678901234567891/10");
  EXPECT_EQ(height(big), mpz_class("123456789012345678901234567891"));
}

TEST(Scalar, SquareRootsModP) {
  for (std::int64_t p : {3, 5, 7, 13, 17, 97}) {
    const FieldDesc f = FieldDesc::prime(p);
    for (std::int64_t x = 0; x < p; ++x) {
      bool ref = false;
      for (std::int64_t y = 0; y < p; ++y) ref = ref || (y * y) % p == x;
      const Scalar s(f, x);
      EXPECT_EQ(is_square_mod_p(s), ref) << x << " mod " << p;
      if (ref) {
        const Scalar r = sqrt_mod_p(s);
        EXPECT_EQ(r * r, s);
        EXPECT_LE(r.residue(), p - r.residue() == p ? 0 : p - r.residue());
      } else {
        EXPECT_THROW(sqrt_mod_p(s), FieldError);
      }
    }
  }
}

TEST(Scalar, SignAndHeight) {
  EXPECT_EQ(Scalar(Q, -3, 4).sign(), -1);
  EXPECT_EQ(Scalar(Q, 0).sign(), 0);
  EXPECT_EQ(Scalar(Q, 5, 7).sign(), 1);
  EXPECT_EQ(height(Scalar(Q, -3, 4)), 4);
  EXPECT_EQ(height(Scalar(Q, -9, 4)), 9);
}
