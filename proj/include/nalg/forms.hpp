#pragma once

// Quadratic forms q(x) = 1/2 x^T G x with symmetric Gram matrix G of the
// polar form <x, y> = q(x + y) - q(x) - q(y).

#include <optional>
#include <string>
#include <vector>

#include "nalg/linalg.hpp"
#include "nalg/osborn.hpp"

namespace nalg {

struct QuadraticFormData {
  FieldDesc field;
  Matrix gram;

  /// Throws InvariantViolation unless gram is square and symmetric.
  QuadraticFormData(const FieldDesc& f, Matrix g);

  std::size_t m() const { return gram.rows(); }
  Scalar value(const Vector& x) const;
  Scalar polar(const Vector& x, const Vector& y) const;
};

/// Norm form n(alpha, u) = alpha^2 - (u, u) of a quadratic algebra in the
/// Osborn basis (1, u_1, .., u_m). The polar form is 2 on F1 and -2 (u, v)
/// (symmetrized) on Im A. This is the only place where that factor is
/// introduced.
QuadraticFormData norm_form(const OsbornData& data);
/// Restriction of the norm form to Im A: Gram -((u_i,u_j) + (u_j,u_i)).
QuadraticFormData norm_form_on_im(const OsbornData& data);
/// Restriction of a form to the span of the given (independent) vectors.
QuadraticFormData restrict_form(const QuadraticFormData& f, const std::vector<Vector>& basis);

struct RadicalResult {
  std::vector<Vector> basis;
  bool nondegenerate;  // radical is zero
};

RadicalResult radical(const QuadraticFormData& f);

struct Diagonalization {
  Matrix change;    // P, columns are the new basis
  Matrix diagonal;  // P^T G P
};

/// Congruence diagonalization in characteristic != 2.
Diagonalization diagonalize(const QuadraticFormData& f);

enum class Isotropy { Anisotropic, Isotropic, Unknown };
std::string to_string(Isotropy i);

struct IsotropyVerdict {
  Isotropy status = Isotropy::Unknown;
  std::optional<Vector> witness;  // Isotropic only
  std::string method;
};

/// Exact over F_p. Over Q: radical or sign-definite diagonal decide the
/// case; otherwise a bounded search over vectors with at most three nonzero
/// integer coordinates of absolute value <= search_height in a diagonal
/// basis, falling back to Unknown.
IsotropyVerdict isotropy(const QuadraticFormData& f, int search_height = 10);

} // namespace nalg
