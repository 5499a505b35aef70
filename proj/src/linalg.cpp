#include "nalg/linalg.hpp"

#include <algorithm>
#include <utility>

namespace nalg {

Vector zero_vector(const FieldDesc& field, std::size_t n) {
  return Vector(n, Scalar::zero(field));
}

Vector unit_vector(const FieldDesc& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, std::span<const Scalar> v) {
  Vector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(s * x);
  return r;
}

void axpy(Vector& v, const Scalar& s, std::span<const Scalar> w) {
  if (v.size() != w.size()) throw Error("vector length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero()) v[i] += s * w[i];
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size() || a.empty()) throw Error("bad dot product operands");
  Scalar r = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Matrix::Matrix(const FieldDesc& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldDesc& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_columns(const FieldDesc& field, std::size_t rows,
                            const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const FieldDesc& field, std::size_t cols,
                         const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (cols_ != v.size()) throw Error("matrix/vector shape mismatch");
  Vector r = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[f] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve(const Matrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) throw Error("rhs length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  AffineSolution sol{zero_vector(m.field(), m.cols()), {}};
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    sol.particular[e.pivots[r]] = e.reduced(r, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[f] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Vector Span::reduce(std::span<const Scalar> v) const {
  if (v.size() != n_) throw Error("span ambient dimension mismatch");
  Vector r(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = r[pivots_[k]];
    if (!c.is_zero()) axpy(r, -c, rows_[k]);
  }
  return r;
}

bool Span::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool Span::insert(std::span<const Scalar> v) {
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == r.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - r.begin());
  r = scale(it->inverse(), r);
  for (auto& row : rows_)
    if (!row[p].is_zero()) axpy(row, -row[p], r);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

std::optional<Vector> coordinates_in(const FieldDesc& field,
                                     const std::vector<Vector>& vectors,
                                     std::span<const Scalar> v) {
  Matrix m = Matrix::from_columns(field, v.size(), vectors);
  auto sol = solve(m, v);
  if (!sol) return std::nullopt;
  if (!sol->kernel.empty()) throw Error("coordinates_in: dependent vectors");
  return sol->particular;
}

bool linearly_independent(const FieldDesc& field, std::size_t n,
                          const std::vector<Vector>& vectors) {
  Span s(field, n);
  for (const auto& v : vectors)
    if (!s.insert(v)) return false;
  return true;
}

} // namespace nalg
