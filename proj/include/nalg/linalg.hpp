#pragma once

// Exact dense linear algebra over a FieldDesc. Pivoting is always the first
// nonzero entry in row order, so every result is reproducible.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nalg/scalar.hpp"

namespace nalg {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldDesc& field, std::size_t n);
Vector unit_vector(const FieldDesc& field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);
/// v += s * w
void axpy(Vector& v, const Scalar& s, std::span<const Scalar> w);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

class Matrix {
public:
  Matrix(const FieldDesc& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldDesc& field, std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(const FieldDesc& field, std::size_t rows,
                             const std::vector<Vector>& cols);
  static Matrix from_rows(const FieldDesc& field, std::size_t cols,
                          const std::vector<Vector>& rows);

  const FieldDesc& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(std::span<const Scalar> v) const;

  bool is_symmetric() const;
  bool is_diagonal() const;

  bool operator==(const Matrix&) const = default;

private:
  FieldDesc field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column (free variable = 1,
/// other free variables 0), ordered by free column.
std::vector<Vector> kernel(const Matrix& m);

struct AffineSolution {
  Vector particular;           // free variables set to zero
  std::vector<Vector> kernel;  // homogeneous solutions, see kernel()
};

/// Solves m x = rhs; nullopt when inconsistent.
std::optional<AffineSolution> solve(const Matrix& m, std::span<const Scalar> rhs);
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of F^n kept as reduced echelon rows.
class Span {
public:
  Span(const FieldDesc& field, std::size_t n) : field_(field), n_(n) {}

  /// Adds v; returns true when the dimension grew.
  bool insert(std::span<const Scalar> v);
  bool contains(std::span<const Scalar> v) const;
  /// Reduces v against the basis; zero iff v is in the span.
  Vector reduce(std::span<const Scalar> v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  /// Reduced echelon basis, sorted by pivot column.
  const std::vector<Vector>& basis() const { return rows_; }

private:
  FieldDesc field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coefficients c with sum c_i vectors[i] = v, or nullopt. The vectors must
/// be linearly independent.
std::optional<Vector> coordinates_in(const FieldDesc& field,
                                     const std::vector<Vector>& vectors,
                                     std::span<const Scalar> v);

bool linearly_independent(const FieldDesc& field, std::size_t n,
                          const std::vector<Vector>& vectors);

} // namespace nalg
