#pragma once

// Finite-dimensional unital algebras given by structure constants, and exact
// checks of the commutative, associative, flexible, alternative and
// quadratic laws.

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "nalg/linalg.hpp"
#include "nalg/scalar.hpp"

namespace nalg {

class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// Coordinates of an algebra element relative to the owning algebra's basis.
class Element {
public:
  Element() = default;
  explicit Element(Vector coords) : coords_(std::move(coords)) {}

  const Vector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const FieldDesc& field() const { return coords_.at(0).field(); }
  bool is_zero() const { return nalg::is_zero(coords_); }

  Element operator+(const Element& o) const { return Element(add(coords_, o.coords_)); }
  Element operator-(const Element& o) const { return Element(sub(coords_, o.coords_)); }
  Element operator-() const { return Element(scale(-Scalar::one(field()), coords_)); }
  friend Element operator*(const Scalar& s, const Element& e) {
    return Element(scale(s, e.coords_));
  }

  bool operator==(const Element&) const = default;

  std::string to_string() const;

private:
  Vector coords_;
};

class Algebra {
public:
  /// mul[(i*n + j)*n + k] is the coefficient of e_k in e_i e_j. Throws
  /// InvariantViolation when shapes disagree or unit is not a two-sided
  /// identity on the basis.
  Algebra(const FieldDesc& field, std::size_t dim, std::vector<Scalar> mul,
          Vector unit, std::vector<std::string> basis_names = {});

  const FieldDesc& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return mul_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& structure_constants() const { return mul_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  /// Basis label; generated as e0, e1, ... when no names were given.
  std::string basis_name(std::size_t i) const;

  Element one() const { return Element(unit_); }
  Element zero() const { return Element(zero_vector(field_, dim_)); }
  Element basis(std::size_t i) const { return Element(unit_vector(field_, dim_, i)); }
  Element element(Vector coords) const;
  /// Element from integer coordinates.
  Element element(std::initializer_list<std::int64_t> coords) const;
  Element scalar(const Scalar& s) const { return s * one(); }

  /// Bilinear extension of the structure constants. Throws Error when an
  /// operand does not belong to this algebra.
  Element mul(const Element& x, const Element& y) const;

  /// Matrix of y -> x y (left) and y -> y x (right).
  Matrix left_mult_matrix(const Element& x) const;
  Matrix right_mult_matrix(const Element& x) const;

  /// Structure constants and unit agree exactly.
  bool same_structure(const Algebra& o) const;

  void check_element(const Element& x) const;

private:
  FieldDesc field_;
  std::size_t dim_;
  std::vector<Scalar> mul_;
  Vector unit_;
  std::vector<std::string> names_;
};

inline Element multiply(const Algebra& a, const Element& x, const Element& y) {
  return a.mul(x, y);
}

enum class Law { Commutative, Associative, Flexible, Alternative, Quadratic, Involutive };

std::string to_string(Law law);
Law parse_law(std::string_view text);

struct LawVerdict {
  Law law;
  bool holds = true;
  std::vector<Element> witness;  // empty when holds
  std::string detail;
};

/// Decides a multilinearizable law on basis tuples. Flexible and alternative
/// are checked through their linearizations; a failing basis triple is turned
/// back into a two-element witness of the original law.
LawVerdict check_law(const Algebra& a, Law law);

/// True when the unlinearized law fails on the witness (x, y[, z]). For
/// Quadratic the witness is a single element with 1, x, x^2 independent.
bool law_fails_on(const Algebra& a, Law law, std::span<const Element> witness);

struct QuadraticVerdict : LawVerdict {
  /// On Yes: u_2..u_n spanning the trace-zero part, with u_i^2 in F1.
  std::vector<Element> im_basis;
};

/// Exact quadraticity test (char != 2).
QuadraticVerdict is_quadratic(const Algebra& a);

/// Reduced echelon basis of the unital subalgebra generated by gens.
std::vector<Element> subalgebra_closure(const Algebra& a, const std::vector<Element>& gens);

/// Whether a b lies in span{1, a, b}; for quadratic algebras this makes the
/// span a subalgebra.
bool span_is_subalgebra(const Algebra& alg, const Element& a, const Element& b);

bool in_span(const Algebra& a, const Element& x, const std::vector<Element>& vectors);

/// If x = s * 1 returns s.
std::optional<Scalar> scalar_part_if_scalar(const Algebra& a, const Element& x);

Scalar random_scalar(const FieldDesc& field, std::mt19937_64& rng);
Element random_element(const Algebra& a, std::mt19937_64& rng);

} // namespace nalg
