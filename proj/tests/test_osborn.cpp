#include <gtest/gtest.h>

#include <random>

#include "nalg/constructions.hpp"
#include "nalg/osborn.hpp"

using namespace nalg;

namespace {

const FieldDesc Q = FieldDesc::rational();
const FieldDesc F5 = FieldDesc::prime(5);

std::pair<Matrix, CrossTensor> random_osborn_data(const FieldDesc& f, std::size_t m, bool symmetric,
                                           std::mt19937_64& rng) {
  Matrix g(f, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      g(i, j) = (symmetric && j < i) ? g(j, i) : random_scalar(f, rng);
  CrossTensor t(m * m * m, Scalar::zero(f));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        t[(i * m + j) * m + k] = random_scalar(f, rng);
        t[(j * m + i) * m + k] = -t[(i * m + j) * m + k];
      }
  return {g, t};
}

} // namespace

TEST(Osborn, SplitQuaternions) {
  const Algebra h = split_quaternions_table(Q).algebra;
  const OsbornData d = decompose(h);
  ASSERT_EQ(d.m(), 3u);
  Matrix g(Q, 3, 3);
  g(0, 0) = Scalar(Q, 1);
  g(1, 1) = Scalar(Q, 1);
  g(2, 2) = Scalar(Q, -1);
  EXPECT_EQ(d.gram(), g);
  EXPECT_EQ(d.cross(0, 1, 2), Scalar(Q, 1));   // i x j = k
  EXPECT_EQ(d.cross(1, 0, 2), Scalar(Q, -1));
  EXPECT_EQ(d.cross(1, 2, 0), Scalar(Q, -1));  // j x k = -i
  EXPECT_TRUE(involutive_criterion(d).holds);
  EXPECT_TRUE(flexible_criterion(d).holds);
}

TEST(Osborn, UpperTriangular) {
  const Algebra u = upper_triangular(Q).algebra;
  const OsbornData d = decompose(u);
  const auto [uv_form, uv_cross] = form_cross(d, u.basis(1), u.basis(2));
  EXPECT_TRUE(uv_form.is_zero());
  EXPECT_EQ(uv_cross, u.basis(1));
  EXPECT_TRUE(form_cross(d, u.basis(1), u.basis(1)).first.is_zero());
  EXPECT_EQ(form_cross(d, u.basis(2), u.basis(2)).first, Scalar::one(Q));
  EXPECT_THROW(form_cross(d, u.one(), u.basis(1)), Error);
}

TEST(Osborn, NotQuadraticCarriesWitness) {
  const Algebra a = search_division_3d(3).algebra;
  try {
    decompose(a);
    FAIL() << "expected NotQuadratic";
  } catch (const NotQuadratic& e) {
    ASSERT_EQ(e.witness().size(), 1u);
    EXPECT_TRUE(law_fails_on(a, Law::Quadratic, e.witness()));
  }
}

TEST(Osborn, MultiplicationFormulaHolds) {
  std::mt19937_64 rng(1);
  std::vector<Algebra> algebras{split_hurwitz(2, F5).algebra, h_plus_line(Q).algebra,
                                standard_tower(3, Q).algebra};
  for (std::size_t m = 1; m <= 3; ++m) {
    auto [g, t] = random_osborn_data(Q, m, false, rng);
    algebras.push_back(build_from_osborn(Q, g, t));
  }
  for (const auto& a : algebras) {
    const OsbornData d = decompose(a);
    for (int s = 0; s < 50; ++s) {
      const Element x = random_element(a, rng), y = random_element(a, rng);
      const auto [alpha, u] = d.split(x);
      const auto [beta, v] = d.split(y);
      const Scalar head = alpha * beta + d.form(u, v);
      const Vector tail = add(add(scale(alpha, v), scale(beta, u)), d.cross_coords(u, v));
      EXPECT_EQ(a.mul(x, y), d.join(head, tail));
      EXPECT_EQ(d.join(alpha, u), x);
    }
  }
}

TEST(Osborn, BuildDecomposeRoundTrip) {
  std::mt19937_64 rng(2);
  for (const FieldDesc& f : {Q, F5}) {
    for (int s = 0; s < 100; ++s) {
      auto [g, t] = random_osborn_data(f, 1 + s % 4, s % 2 == 0, rng);
      const Algebra a = build_from_osborn(f, g, t);
      const OsbornData d = decompose(a);
      EXPECT_EQ(d.gram(), g);
      EXPECT_EQ(d.cross(), t);
      EXPECT_EQ(involutive_criterion(d).holds, g.is_symmetric());
    }
  }
}

TEST(Osborn, RejectsNonAnticommutativeCross) {
  Matrix g(Q, 2, 2);
  CrossTensor t(8, Scalar::zero(Q));
  t[(0 * 2 + 1) * 2 + 0] = Scalar::one(Q);
  EXPECT_FALSE(is_anticommutative(2, t));
  EXPECT_THROW(build_from_osborn(Q, g, t), InvariantViolation);
  t[(0 * 2 + 0) * 2 + 1] = Scalar::one(Q);
  EXPECT_FALSE(is_anticommutative(2, t));
}

TEST(Osborn, InvolutionValues) {
  std::mt19937_64 rng(3);
  const InvolutiveAlgebra x = standard_tower(3, Q);
  const OsbornData d = decompose(x.algebra);
  for (int s = 0; s < 50; ++s) {
    const Element a = random_element(x.algebra, rng);
    const InvolutionValues iv = involution_values(d, a);
    EXPECT_EQ(iv.conj, x.conjugate(a));
    EXPECT_EQ(iv.trace * x.algebra.one(), a + x.conjugate(a));
    EXPECT_EQ(iv.norm * x.algebra.one(), x.algebra.mul(a, x.conjugate(a)));
  }
}

TEST(Osborn, FlexibleCriterionAgreesWithLawCheck) {
  std::mt19937_64 rng(4);
  std::size_t flexible = 0;
  for (int s = 0; s < 100; ++s) {
    const std::size_t m = 1 + s % 3;
    auto [g, t] = random_osborn_data(F5, m, s % 2 == 0, rng);
    if (s % 5 == 0) t.assign(t.size(), Scalar::zero(F5));
    const Algebra a = build_from_osborn(F5, g, t);
    const OsbornData d = decompose(a);
    const LawVerdict v = flexible_criterion(d);
    EXPECT_EQ(v.holds, check_law(a, Law::Flexible).holds);
    if (!v.holds) EXPECT_TRUE(osborn_flexibility_fails_on(d, v.witness[0], v.witness[1]));
    flexible += v.holds ? 1 : 0;
  }
  EXPECT_GT(flexible, 0u);
  EXPECT_LT(flexible, 100u);
}

TEST(Osborn, IdentitySuite) {
  for (const FieldDesc& f : {Q, F5}) {
    for (const InvolutiveAlgebra& x :
         {split_quaternions_table(f), upper_triangular(f), standard_tower(4, f), split_hurwitz(8, f)}) {
      const IdentityReport r = identity_suite(x.algebra, decompose(x.algebra), 100, 9);
      EXPECT_TRUE(r.passed) << r.failure;
      EXPECT_TRUE(r.involutive);
      EXPECT_GT(r.checks, 200u);
    }
  }
  // asymmetric form: only the identities that hold for every quadratic algebra run
  Matrix g(Q, 2, 2);
  g(0, 1) = Scalar::one(Q);
  const Algebra a = build_from_osborn(Q, g, CrossTensor(8, Scalar::zero(Q)));
  const IdentityReport r = identity_suite(a, decompose(a), 50, 1);
  EXPECT_TRUE(r.passed) << r.failure;
  EXPECT_FALSE(r.involutive);
}
