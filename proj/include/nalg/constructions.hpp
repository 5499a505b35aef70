#pragma once

// Builders for the algebras used throughout: Cayley-Dickson doubles and the
// standard tower, the split Hurwitz algebras, the split quaternions H in the
// (1, i, j, k) basis, upper triangular matrices U, H + Fl, the anisotropic
// non-flexible 3-dimensional algebra, and 3-dimensional division algebras
// over F_p.

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "nalg/algebra.hpp"

namespace nalg {

class SearchExhausted : public Error {
public:
  using Error::Error;
};

/// An algebra with a linear involution conj(x) = C x.
struct InvolutiveAlgebra {
  Algebra algebra;
  Matrix conj;

  Element conjugate(const Element& x) const { return Element(conj * x.coords()); }
};

/// Checks conj^2 = 1, conj(1) = 1, conj(e_i e_j) = conj(e_j) conj(e_i), and
/// a + conj(a), a conj(a) scalar on the basis and `samples` random elements.
/// Returns an empty string when all hold, else a description.
std::string involutive_invariant_failure(const InvolutiveAlgebra& x, std::size_t samples = 100,
                                         std::uint64_t seed = 1);

/// (a, b)(c, d) = (ac - d conj(b), conj(a) d + c b), conj(a, b) = (conj(a), -b).
/// Throws InvariantViolation if the input fails the involution invariants.
InvolutiveAlgebra cayley_dickson_double(const InvolutiveAlgebra& x);

/// A_0 = the base field, A_{k+1} = double(A_k); k <= 4.
InvolutiveAlgebra standard_tower(int level, const FieldDesc& field);

/// Basis (1, i, j, k) with i^2 = j^2 = 1, k^2 = -1, ij = k.
InvolutiveAlgebra split_quaternions_table(const FieldDesc& field);

/// Basis (1, u, v) with u^2 = 0, v^2 = 1, uv = u = -vu.
InvolutiveAlgebra upper_triangular(const FieldDesc& field);

/// d = 2: F x F on the idempotent basis with swap involution; d = 4:
/// split_quaternions_table; d = 8: Zorn vector matrices (a, x, y, b).
/// Throws InvariantViolation when the post-construction self-check fails.
InvolutiveAlgebra split_hurwitz(int d, const FieldDesc& field);

/// H + Fl with l Im H = (Im H) l = 0 and l^2 = -1; basis (1, i, j, k, l).
InvolutiveAlgebra h_plus_line(const FieldDesc& field);

/// F + V with orthogonal (u, v), (u, u) = q_u, (v, v) = q_v, u x v = u;
/// basis (1, u, v).
InvolutiveAlgebra anisotropic_nonflexible(const FieldDesc& field, const Scalar& q_u, const Scalar& q_v);

struct DivisionAlgebra3 {
  Algebra algebra;
  std::vector<std::int64_t> modulus;  // monic cubic, coefficients c0, c1, c2
  std::vector<std::int64_t> twist;    // twist parameter in the basis 1, t, t^2
};

/// Searches x o y = xy - c x^p y^(p^2) in F_p[t]/(f) over c in lexicographic
/// order, unitalizes by a * b = (R_1^-1 a) o (L_1^-1 b), and returns the first
/// candidate verified exhaustively to be a non-commutative, non-quadratic
/// division algebra. Requires p^3 <= 10^6.
DivisionAlgebra3 search_division_3d(std::int64_t p);

/// Whether every nonzero element has an invertible left multiplication
/// (exhaustive; prime fields).
bool is_division_algebra_exhaustive(const Algebra& a);

/// Norm n(x) = x conj(x) as a scalar, or nullopt when it is not scalar.
std::optional<Scalar> norm_of(const InvolutiveAlgebra& x, const Element& a);

} // namespace nalg
