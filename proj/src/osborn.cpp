#include "nalg/osborn.hpp"

#include <random>

namespace nalg {

OsbornData::OsbornData(const Algebra& a, std::vector<Element> im_basis)
    : field_(a.field()), n_(a.dim()), unit_(a.one()), im_basis_(std::move(im_basis)),
      to_osborn_(a.field(), a.dim(), a.dim()),
      gram_(a.field(), im_basis_.size(), im_basis_.size()) {
  const std::size_t mm = m();
  if (mm + 1 != n_) throw InvariantViolation("Im basis must have dimension n - 1");
  std::vector<Vector> cols{unit_.coords()};
  for (const auto& u : im_basis_) cols.push_back(u.coords());
  auto inv = inverse(Matrix::from_columns(field_, n_, cols));
  if (!inv) throw InvariantViolation("1 and the Im basis are not a basis of A");
  to_osborn_ = std::move(*inv);

  cross_.assign(mm * mm * mm, Scalar::zero(field_));
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < mm; ++j) {
      auto [alpha, c] = split(a.mul(im_basis_[i], im_basis_[j]));
      gram_(i, j) = alpha;
      for (std::size_t k = 0; k < mm; ++k) cross_[(i * mm + j) * mm + k] = c[k];
    }
  for (std::size_t i = 0; i < mm; ++i)
    if (!is_zero(cross_coords(unit_vector(field_, mm, i), unit_vector(field_, mm, i))))
      throw InvariantViolation("Im basis vector with non-scalar square");
  if (!is_anticommutative(mm, cross_))
    throw InvariantViolation("cross product is not anticommutative");
}

std::pair<Scalar, Vector> OsbornData::split(const Element& a) const {
  if (a.size() != n_) throw Error("element does not belong to this algebra");
  Vector c = to_osborn_ * a.coords();
  Scalar alpha = c[0];
  c.erase(c.begin());
  return {alpha, std::move(c)};
}

Element OsbornData::join(const Scalar& alpha, const Vector& im_coords) const {
  if (im_coords.size() != m()) throw Error("Im coordinate vector has wrong length");
  Element r = alpha * unit_;
  for (std::size_t i = 0; i < m(); ++i)
    if (!im_coords[i].is_zero()) r = r + im_coords[i] * im_basis_[i];
  return r;
}

Scalar OsbornData::form(const Vector& x, const Vector& y) const {
  if (m() == 0) return Scalar::zero(field_);
  return dot(x, gram_ * y);
}

Vector OsbornData::cross_coords(const Vector& x, const Vector& y) const {
  const std::size_t mm = m();
  Vector r = zero_vector(field_, mm);
  for (std::size_t i = 0; i < mm; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < mm; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < mm; ++k) {
        const Scalar& t = cross_[(i * mm + j) * mm + k];
        if (!t.is_zero()) r[k] += xy * t;
      }
    }
  }
  return r;
}

OsbornData decompose(const Algebra& a) {
  QuadraticVerdict q = is_quadratic(a);
  if (!q.holds) throw NotQuadratic("algebra is not quadratic: " + q.detail, q.witness);
  return OsbornData(a, std::move(q.im_basis));
}

InvolutionValues involution_values(const OsbornData& data, const Element& a) {
  auto [alpha, u] = data.split(a);
  const Scalar two(data.field(), 2);
  Element conj = data.join(alpha, scale(-Scalar::one(data.field()), u));
  return {std::move(conj), two * alpha, alpha * alpha - data.form(u, u)};
}

std::pair<Scalar, Element> form_cross(const OsbornData& data, const Element& u,
                                      const Element& v) {
  auto [au, cu] = data.split(u);
  auto [av, cv] = data.split(v);
  if (!au.is_zero() || !av.is_zero()) throw Error("form_cross arguments must lie in Im A");
  return {data.form(cu, cv), data.im_element(data.cross_coords(cu, cv))};
}

bool is_anticommutative(std::size_t m, const CrossTensor& cross) {
  if (cross.size() != m * m * m) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!(cross[(i * m + j) * m + k] == -cross[(j * m + i) * m + k])) return false;
  return true;
}

Algebra build_from_osborn(const FieldDesc& field, const Matrix& gram, const CrossTensor& cross) {
  const std::size_t m = gram.rows();
  if (gram.cols() != m) throw InvariantViolation("gram matrix must be square");
  if (!is_anticommutative(m, cross))
    throw InvariantViolation("cross tensor is not anticommutative");
  const std::size_t n = m + 1;
  std::vector<Scalar> mul(n * n * n, Scalar::zero(field));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& {
    return mul[(i * n + j) * n + k];
  };
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) {
    at(0, i, i) = one;
    at(i, 0, i) = one;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      at(i + 1, j + 1, 0) = gram(i, j);
      for (std::size_t k = 0; k < m; ++k) at(i + 1, j + 1, k + 1) = cross[(i * m + j) * m + k];
    }
  std::vector<std::string> names{"1"};
  for (std::size_t i = 0; i < m; ++i) names.push_back("u" + std::to_string(i + 1));
  return Algebra(field, n, std::move(mul), unit_vector(field, n, 0), std::move(names));
}

bool osborn_flexibility_fails_on(const OsbornData& data, const Element& u, const Element& v) {
  auto [au, cu] = data.split(u);
  auto [av, cv] = data.split(v);
  if (!au.is_zero() || !av.is_zero()) throw Error("flexibility witness must lie in Im A");
  return !(data.form(cu, cv) == data.form(cv, cu)) ||
         !data.form(cu, data.cross_coords(cu, cv)).is_zero();
}

LawVerdict involutive_criterion(const OsbornData& data) {
  LawVerdict v{Law::Involutive, true, {}, {}};
  const Matrix& g = data.gram();
  for (std::size_t i = 0; i < data.m(); ++i)
    for (std::size_t j = i + 1; j < data.m(); ++j)
      if (!(g(i, j) == g(j, i))) {
        v.holds = false;
        v.witness = {data.im_basis()[i], data.im_basis()[j]};
        v.detail = "(u" + std::to_string(i + 1) + ", u" + std::to_string(j + 1) +
                   ") != (u" + std::to_string(j + 1) + ", u" + std::to_string(i + 1) + ")";
        return v;
      }
  return v;
}

LawVerdict flexible_criterion(const OsbornData& data) {
  LawVerdict v = involutive_criterion(data);
  v.law = Law::Flexible;
  if (!v.holds) return v;
  const std::size_t m = data.m();
  const FieldDesc& f = data.field();
  // (u, u x v) is quadratic in u; its polarization in u is
  // (u, w x v) + (w, u x v), and u = w returns twice the original.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector ui = unit_vector(f, m, i), uj = unit_vector(f, m, j),
                     uk = unit_vector(f, m, k);
        const Scalar lin = data.form(ui, data.cross_coords(uj, uk)) +
                           data.form(uj, data.cross_coords(ui, uk));
        if (lin.is_zero()) continue;
        v.holds = false;
        const Element vk = data.im_element(uk);
        for (const Vector& cand : {ui, uj, add(ui, uj)}) {
          const Element u = data.im_element(cand);
          if (osborn_flexibility_fails_on(data, u, vk)) {
            v.witness = {u, vk};
            break;
          }
        }
        if (v.witness.empty()) throw Error("internal: flexibility witness not found");
        v.detail = "(u, u x v) != 0 for the reported pair";
        return v;
      }
  return v;
}

IdentityReport identity_suite(const Algebra& a, const OsbornData& data, std::size_t samples,
                              std::uint64_t seed) {
  IdentityReport rep;
  rep.involutive = involutive_criterion(data).holds;
  std::mt19937_64 rng(seed);
  const FieldDesc& f = a.field();
  const Element one = a.one();

  auto fail = [&](std::string what, std::vector<Element> elems) {
    if (rep.passed) {
      rep.passed = false;
      rep.failure = std::move(what);
      rep.failing = std::move(elems);
    }
  };

  std::vector<Element> singles;
  for (std::size_t i = 0; i < a.dim(); ++i) singles.push_back(a.basis(i));
  for (std::size_t s = 0; s < samples; ++s) singles.push_back(random_element(a, rng));
  for (const auto& x : singles) {
    const auto iv = involution_values(data, x);
    ++rep.checks;
    const Element lhs = a.mul(x, x) - iv.trace * x + iv.norm * one;
    if (!lhs.is_zero()) fail("a^2 - tr(a) a + n(a) != 0", {x});
  }

  if (rep.involutive) {
    std::vector<std::pair<Element, Element>> pairs;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) pairs.emplace_back(a.basis(i), a.basis(j));
    for (std::size_t s = 0; s < samples; ++s) {
      Element x = random_element(a, rng);
      pairs.emplace_back(std::move(x), random_element(a, rng));
    }
    for (const auto& [x, y] : pairs) {
      const auto ix = involution_values(data, x), iy = involution_values(data, y);
      const Element lhs = involution_values(data, a.mul(x, y)).conj - a.mul(y, x);
      const Element rhs = (ix.trace * iy.trace) * one - ix.trace * y - iy.trace * x;
      ++rep.checks;
      if (!(lhs == rhs)) fail("conj(ab) - ba != tr(a)tr(b) - tr(a)b - tr(b)a", {x, y});
    }
  }

  const Scalar two(f, 2);
  for (std::size_t s = 0; s < samples && data.m() > 0; ++s) {
    Vector cu, cv;
    for (std::size_t i = 0; i < data.m(); ++i) cu.push_back(random_scalar(f, rng));
    for (std::size_t i = 0; i < data.m(); ++i) cv.push_back(random_scalar(f, rng));
    const Element u = data.im_element(cu), v = data.im_element(cv);
    const Element lhs = a.mul(u, v) - a.mul(v, u);
    const Element rhs = (data.form(cu, cv) - data.form(cv, cu)) * one +
                        two * data.im_element(data.cross_coords(cu, cv));
    ++rep.checks;
    if (!(lhs == rhs)) fail("uv - vu != ((u,v) - (v,u)) + 2 u x v", {u, v});
  }
  return rep;
}

} // namespace nalg
