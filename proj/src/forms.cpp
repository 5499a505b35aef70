#include "nalg/forms.hpp"

namespace nalg {

QuadraticFormData::QuadraticFormData(const FieldDesc& f, Matrix g)
    : field(f), gram(std::move(g)) {
  if (gram.rows() != gram.cols()) throw InvariantViolation("gram matrix must be square");
  if (!gram.is_symmetric()) throw InvariantViolation("gram matrix must be symmetric");
}

Scalar QuadraticFormData::value(const Vector& x) const {
  if (m() == 0) return Scalar::zero(field);
  return Scalar(field, 1, 2) * dot(x, gram * x);
}

Scalar QuadraticFormData::polar(const Vector& x, const Vector& y) const {
  return dot(x, gram * y);
}

QuadraticFormData norm_form_on_im(const OsbornData& data) {
  const std::size_t m = data.m();
  Matrix g(data.field(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) = -(data.gram()(i, j) + data.gram()(j, i));
  return {data.field(), std::move(g)};
}

QuadraticFormData norm_form(const OsbornData& data) {
  const std::size_t m = data.m();
  const QuadraticFormData im = norm_form_on_im(data);
  Matrix g(data.field(), m + 1, m + 1);
  g(0, 0) = Scalar(data.field(), 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i + 1, j + 1) = im.gram(i, j);
  return {data.field(), std::move(g)};
}

QuadraticFormData restrict_form(const QuadraticFormData& f, const std::vector<Vector>& basis) {
  Matrix g(f.field, basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = f.polar(basis[i], basis[j]);
  return {f.field, std::move(g)};
}

RadicalResult radical(const QuadraticFormData& f) {
  if (f.m() == 0) return {{}, true};
  auto k = kernel(f.gram);
  const bool nondeg = k.empty();
  return {std::move(k), nondeg};
}

Diagonalization diagonalize(const QuadraticFormData& f) {
  const std::size_t m = f.m();
  Matrix p = Matrix::identity(f.field, m);
  Matrix g = f.gram;

  // basis vector a += c * basis vector b, applied to P and by congruence to G
  auto add_multiple = [&](std::size_t a, std::size_t b, const Scalar& c) {
    for (std::size_t i = 0; i < m; ++i) p(i, a) += c * p(i, b);
    for (std::size_t j = 0; j < m; ++j) g(a, j) += c * g(b, j);
    for (std::size_t i = 0; i < m; ++i) g(i, a) += c * g(i, b);
  };

  for (std::size_t k = 0; k < m; ++k) {
    if (g(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < m && g(k, j).is_zero()) ++j;
      if (j == m) continue;  // row is zero: a radical direction
      // 2c g(k,j) + c^2 g(j,j) vanishes for at most one nonzero c.
      for (std::int64_t c : {1, 2}) {
        const Scalar cs(f.field, c);
        if (!(Scalar(f.field, 2) * cs * g(k, j) + cs * cs * g(j, j)).is_zero()) {
          add_multiple(k, j, cs);
          break;
        }
      }
    }
    const Scalar inv = g(k, k).inverse();
    for (std::size_t j = k + 1; j < m; ++j)
      if (!g(k, j).is_zero()) add_multiple(j, k, -(g(k, j) * inv));
  }
  return {std::move(p), std::move(g)};
}

std::string to_string(Isotropy i) {
  switch (i) {
  case Isotropy::Anisotropic: return "anisotropic";
  case Isotropy::Isotropic: return "isotropic";
  case Isotropy::Unknown: return "unknown";
  }
  return "?";
}

namespace {

IsotropyVerdict isotropic(const QuadraticFormData& f, Vector w, std::string method) {
  if (is_zero(w) || !f.value(w).is_zero())
    throw Error("internal: invalid isotropy witness");
  return {Isotropy::Isotropic, std::move(w), std::move(method)};
}

Vector lift(const Diagonalization& d, const Vector& y) { return d.change * y; }

} // namespace

IsotropyVerdict isotropy(const QuadraticFormData& f, int search_height) {
  const std::size_t m = f.m();
  if (m == 0) return {Isotropy::Anisotropic, std::nullopt, "zero space"};
  if (auto rad = radical(f); !rad.nondegenerate)
    return isotropic(f, rad.basis.front(), "radical");

  const Diagonalization d = diagonalize(f);
  std::vector<Scalar> diag;
  for (std::size_t i = 0; i < m; ++i) diag.push_back(d.diagonal(i, i));
  const FieldDesc& fld = f.field;

  if (fld.is_prime()) {
    if (m == 1) return {Isotropy::Anisotropic, std::nullopt, "rank 1"};
    if (m == 2) {
      const Scalar r = -(diag[1] / diag[0]);
      if (!is_square_mod_p(r)) return {Isotropy::Anisotropic, std::nullopt, "residue test"};
      Vector y = zero_vector(fld, m);
      y[0] = sqrt_mod_p(r);
      y[1] = Scalar::one(fld);
      return isotropic(f, lift(d, y), "residue test");
    }
    // Every nondegenerate ternary form over F_p is isotropic.
    const std::int64_t p = fld.p();
    for (std::int64_t x = 0; x < p; ++x)
      for (std::int64_t yv = 0; yv < p; ++yv) {
        if (x == 0 && yv == 0) continue;
        const Scalar sx(fld, x), sy(fld, yv);
        const Scalar r = -((diag[0] * sx * sx + diag[1] * sy * sy) / diag[2]);
        if (!is_square_mod_p(r)) continue;
        Vector y = zero_vector(fld, m);
        y[0] = sx;
        y[1] = sy;
        y[2] = sqrt_mod_p(r);
        return isotropic(f, lift(d, y), "ternary search");
      }
    throw Error("internal: ternary form over F_p without isotropic vector");
  }

  const int s0 = diag[0].sign();
  bool definite = true;
  for (const auto& x : diag)
    if (x.sign() != s0) definite = false;
  if (definite) return {Isotropy::Anisotropic, std::nullopt, "sign-definite"};

  // Bounded search in the diagonal basis; signs of the coordinates do not
  // matter for a diagonal form, so only positive values are tried.
  const int h = search_height;
  auto sq = [&](int v) { return Scalar(fld, static_cast<std::int64_t>(v) * v); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (int a = 1; a <= h; ++a)
        for (int b = 1; b <= h; ++b)
          if ((diag[i] * sq(a) + diag[j] * sq(b)).is_zero()) {
            Vector y = zero_vector(fld, m);
            y[i] = Scalar(fld, a);
            y[j] = Scalar(fld, b);
            return isotropic(f, lift(d, y), "bounded search");
          }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (int a = 1; a <= h; ++a)
          for (int b = 1; b <= h; ++b)
            for (int c = 1; c <= h; ++c)
              if ((diag[i] * sq(a) + diag[j] * sq(b) + diag[k] * sq(c)).is_zero()) {
                Vector y = zero_vector(fld, m);
                y[i] = Scalar(fld, a);
                y[j] = Scalar(fld, b);
                y[k] = Scalar(fld, c);
                return isotropic(f, lift(d, y), "bounded search");
              }
  return {Isotropy::Unknown, std::nullopt, "bounded search exhausted"};
}

} // namespace nalg
