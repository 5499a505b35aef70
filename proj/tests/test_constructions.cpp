#include <gtest/gtest.h>

#include <random>

#include "nalg/constructions.hpp"
#include "nalg/forms.hpp"
#include "nalg/osborn.hpp"

using namespace nalg;

namespace {

const FieldDesc Q = FieldDesc::rational();
const FieldDesc F3 = FieldDesc::prime(3);

Element half(const Element& x, std::size_t which, std::size_t n) {
  return Element(Vector(x.coords().begin() + static_cast<long>(which * n),
                        x.coords().begin() + static_cast<long>((which + 1) * n)));
}

} // namespace

TEST(Constructions, TowerDimensionsAndLaws) {
  for (int level = 0; level <= 4; ++level) {
    const InvolutiveAlgebra x = standard_tower(level, Q);
    EXPECT_EQ(x.algebra.dim(), std::size_t{1} << level);
    EXPECT_EQ(check_law(x.algebra, Law::Commutative).holds, level <= 1);
    EXPECT_EQ(check_law(x.algebra, Law::Associative).holds, level <= 2);
    EXPECT_TRUE(involutive_invariant_failure(x).empty());
  }
  EXPECT_THROW(standard_tower(5, Q), Error);
  EXPECT_THROW(standard_tower(-1, Q), Error);
  const Algebra c = standard_tower(1, Q).algebra;
  EXPECT_EQ(c.mul(c.basis(1), c.basis(1)), -c.one());
}

TEST(Constructions, DoublingFormula) {
  std::mt19937_64 rng(1);
  const InvolutiveAlgebra base = standard_tower(2, Q);
  const InvolutiveAlgebra dbl = cayley_dickson_double(base);
  const std::size_t n = base.algebra.dim();
  const Algebra& a = base.algebra;
  for (int t = 0; t < 50; ++t) {
    const Element x = random_element(dbl.algebra, rng), y = random_element(dbl.algebra, rng);
    const Element p = half(x, 0, n), q = half(x, 1, n), r = half(y, 0, n), s = half(y, 1, n);
    const Element first = a.mul(p, r) - a.mul(s, base.conjugate(q));
    const Element second = a.mul(base.conjugate(p), s) + a.mul(r, q);
    const Element xy = dbl.algebra.mul(x, y);
    EXPECT_EQ(half(xy, 0, n), first);
    EXPECT_EQ(half(xy, 1, n), second);
    const Element cx = dbl.conjugate(x);
    EXPECT_EQ(half(cx, 0, n), base.conjugate(p));
    EXPECT_EQ(half(cx, 1, n), -q);
  }
}

TEST(Constructions, DoublingRejectsBadInvolution) {
  const InvolutiveAlgebra h = split_quaternions_table(Q);
  const InvolutiveAlgebra bad{h.algebra, Matrix::identity(Q, 4)};
  EXPECT_FALSE(involutive_invariant_failure(bad).empty());
  EXPECT_THROW(cayley_dickson_double(bad), InvariantViolation);
}

TEST(Constructions, SplitHurwitz) {
  std::mt19937_64 rng(2);
  for (const FieldDesc& f : {Q, F3}) {
    for (int d : {2, 4, 8}) {
      const InvolutiveAlgebra x = split_hurwitz(d, f);
      EXPECT_EQ(x.algebra.dim(), static_cast<std::size_t>(d));
      EXPECT_TRUE(involutive_invariant_failure(x).empty());
      EXPECT_EQ(check_law(x.algebra, Law::Associative).holds, d <= 4);
      EXPECT_TRUE(check_law(x.algebra, Law::Alternative).holds);
      const OsbornData od = decompose(x.algebra);
      const QuadraticFormData n = norm_form(od);
      EXPECT_TRUE(radical(n).nondegenerate);
      EXPECT_EQ(isotropy(n).status, Isotropy::Isotropic);
      for (int t = 0; t < 30; ++t) {
        const Element a = random_element(x.algebra, rng), b = random_element(x.algebra, rng);
        EXPECT_EQ(*norm_of(x, x.algebra.mul(a, b)), *norm_of(x, a) * *norm_of(x, b));
      }
    }
  }
  EXPECT_THROW(split_hurwitz(3, Q), Error);
  EXPECT_THROW(split_hurwitz(16, Q), Error);
}

TEST(Constructions, UpperTriangularInsideH) {
  const Algebra h = split_quaternions_table(Q).algebra;
  const Algebra u = upper_triangular(Q).algebra;
  // with this table, u -> (j - k)/2, v -> i embeds U into H
  const std::vector<Element> image{h.one(), Scalar(Q, 1, 2) * (h.basis(2) - h.basis(3)), h.basis(1)};
  auto map = [&](const Element& x) {
    Element r = h.zero();
    for (std::size_t i = 0; i < 3; ++i) r = r + x[i] * image[i];
    return r;
  };
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(map(u.mul(u.basis(i), u.basis(j))), h.mul(image[i], image[j]));
}

TEST(Constructions, HPlusLine) {
  const InvolutiveAlgebra x = h_plus_line(Q);
  const Algebra& a = x.algebra;
  EXPECT_TRUE(involutive_invariant_failure(x).empty());
  EXPECT_TRUE(check_law(a, Law::Flexible).holds);
  EXPECT_FALSE(check_law(a, Law::Alternative).holds);
  const OsbornData d = decompose(a);
  EXPECT_TRUE(radical(norm_form(d)).nondegenerate);
  const Element l = a.basis(4);
  EXPECT_EQ(a.mul(l, l), -a.one());
  for (std::size_t i = 1; i <= 3; ++i) {
    EXPECT_TRUE(a.mul(l, a.basis(i)).is_zero());
    EXPECT_TRUE(a.mul(a.basis(i), l).is_zero());
  }
  const Element xx = a.basis(1) + l, y = a.basis(2) + a.basis(3);
  EXPECT_EQ(a.mul(xx, y), y);
  EXPECT_EQ(a.mul(y, xx), -y);
  EXPECT_EQ(subalgebra_closure(a, {xx, y}).size(), 3u);
}

TEST(Constructions, AnisotropicNonflexible) {
  const Scalar m1(Q, -1);
  const InvolutiveAlgebra x = anisotropic_nonflexible(Q, m1, m1);
  const Algebra& a = x.algebra;
  EXPECT_EQ(a.basis_name(1), "u");
  const Element u = a.basis(1), v = a.basis(2);
  EXPECT_EQ(a.mul(u, u), -a.one());
  EXPECT_EQ(a.mul(v, v), -a.one());
  EXPECT_EQ(a.mul(u, v), u);
  EXPECT_EQ(a.mul(v, u), -u);
  EXPECT_TRUE(involutive_invariant_failure(x).empty());
  // (uv)u = u^2 = -1 while u(vu) = u(-u) = 1
  EXPECT_EQ(a.mul(a.mul(u, v), u), -a.one());
  EXPECT_EQ(a.mul(u, a.mul(v, u)), a.one());
  const InvolutiveAlgebra y = anisotropic_nonflexible(Q, Scalar(Q, 2), Scalar(Q, 3));
  EXPECT_EQ(y.algebra.mul(y.algebra.basis(2), y.algebra.basis(2)), Scalar(Q, 3) * y.algebra.one());
}

TEST(Constructions, DivisionAlgebra) {
  for (std::int64_t p : {3, 5}) {
    const DivisionAlgebra3 d = search_division_3d(p);
    const Algebra& a = d.algebra;
    ASSERT_EQ(d.modulus.size(), 3u);
    for (std::int64_t r = 0; r < p; ++r)
      EXPECT_NE((r * r * r + d.modulus[2] * r * r + d.modulus[1] * r + d.modulus[0]) % p, 0);
    EXPECT_TRUE(is_division_algebra_exhaustive(a));
    for (std::int64_t i = 1; i < p * p * p; ++i) {
      const Element x = a.element({i / (p * p), (i / p) % p, i % p});
      EXPECT_EQ(rank(a.right_mult_matrix(x)), 3u);
    }
    EXPECT_FALSE(check_law(a, Law::Commutative).holds);
    EXPECT_FALSE(is_quadratic(a).holds);
    EXPECT_EQ(search_division_3d(p).twist, d.twist);  // deterministic
  }
  EXPECT_THROW(search_division_3d(101), Error);
  EXPECT_FALSE(is_division_algebra_exhaustive(upper_triangular(F3).algebra));
  EXPECT_THROW(is_division_algebra_exhaustive(upper_triangular(Q).algebra), FieldError);
}
