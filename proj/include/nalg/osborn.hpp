#pragma once

// Osborn's decomposition of a quadratic algebra over a field of
// characteristic != 2: A = F1 (+) Im A with
//   (a, u)(b, v) = (ab + (u, v), a v + b u + u x v),
// where (.,.) is a bilinear form and x an anticommutative product on Im A.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nalg/algebra.hpp"

namespace nalg {

class NotQuadratic : public Error {
public:
  NotQuadratic(const std::string& what, std::vector<Element> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<Element>& witness() const { return witness_; }

private:
  std::vector<Element> witness_;
};

/// Cross-product constants: u_i x u_j = sum_k t[(i*m + j)*m + k] u_k.
using CrossTensor = std::vector<Scalar>;

class OsbornData {
public:
  OsbornData(const Algebra& a, std::vector<Element> im_basis);

  const FieldDesc& field() const { return field_; }
  std::size_t dim() const { return n_; }
  /// Dimension of Im A.
  std::size_t m() const { return im_basis_.size(); }
  const Element& unit() const { return unit_; }
  const std::vector<Element>& im_basis() const { return im_basis_; }
  /// gram(i, j) = (u_i, u_j); may be asymmetric.
  const Matrix& gram() const { return gram_; }
  const CrossTensor& cross() const { return cross_; }
  const Scalar& cross(std::size_t i, std::size_t j, std::size_t k) const {
    return cross_[(i * m() + j) * m() + k];
  }

  /// a = alpha 1 + sum c_i u_i  ->  (alpha, c).
  std::pair<Scalar, Vector> split(const Element& a) const;
  Element join(const Scalar& alpha, const Vector& im_coords) const;
  Element im_element(const Vector& im_coords) const {
    return join(Scalar::zero(field_), im_coords);
  }
  bool in_im(const Element& a) const { return split(a).first.is_zero(); }

  /// (x, y) for Im-coordinate vectors.
  Scalar form(const Vector& x, const Vector& y) const;
  /// x cross y in Im-coordinates.
  Vector cross_coords(const Vector& x, const Vector& y) const;

private:
  FieldDesc field_;
  std::size_t n_;
  Element unit_;
  std::vector<Element> im_basis_;
  Matrix to_osborn_;  // inverse of [1 | u_1 .. u_m]
  Matrix gram_;
  CrossTensor cross_;
};

/// Throws NotQuadratic carrying the quadraticity witness.
OsbornData decompose(const Algebra& a);

struct InvolutionValues {
  Element conj;
  Scalar trace;
  Scalar norm;
};

/// (alpha, u) -> conj (alpha, -u), trace 2 alpha, norm alpha^2 - (u, u).
InvolutionValues involution_values(const OsbornData& data, const Element& a);

/// ((u, v), u x v) for u, v in Im A; throws Error otherwise.
std::pair<Scalar, Element> form_cross(const OsbornData& data, const Element& u,
                                      const Element& v);

/// The (1 + m)-dimensional algebra with basis (1, u_1, .., u_m) and the
/// Osborn multiplication. Throws InvariantViolation on a cross tensor that
/// is not anticommutative.
Algebra build_from_osborn(const FieldDesc& field, const Matrix& gram, const CrossTensor& cross);

bool is_anticommutative(std::size_t m, const CrossTensor& cross);

/// Gram symmetric and (u, u x v) = 0 on Im A, checked through the
/// linearization (u_i, u_j x u_k) + (u_j, u_i x u_k) = 0. The witness is a
/// pair (u, v) of Im elements with (u, v) != (v, u) or (u, u x v) != 0.
LawVerdict flexible_criterion(const OsbornData& data);
/// Gram symmetric; witness (u_i, u_j) with (u_i, u_j) != (u_j, u_i).
LawVerdict involutive_criterion(const OsbornData& data);

/// Re-evaluates a flexible_criterion witness.
bool osborn_flexibility_fails_on(const OsbornData& data, const Element& u, const Element& v);

struct IdentityReport {
  bool passed = true;
  std::size_t checks = 0;
  bool involutive = false;  // whether the conjugation identity was checked
  std::string failure;      // first failure, empty when passed
  std::vector<Element> failing;
};

/// Checks a^2 - tr(a) a + n(a) = 0 on the basis and `samples` random
/// elements; conj(ab) - ba = tr(a)tr(b) - tr(a) b - tr(b) a on basis pairs and
/// random pairs when the form is symmetric; and
/// uv - vu = ((u,v) - (v,u)) 1 + 2 u x v on random Im pairs.
IdentityReport identity_suite(const Algebra& a, const OsbornData& data, std::size_t samples,
                              std::uint64_t seed);

} // namespace nalg
