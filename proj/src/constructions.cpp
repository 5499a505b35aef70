#include "nalg/constructions.hpp"

#include <array>
#include <functional>
#include <string_view>

#include "nalg/osborn.hpp"

namespace nalg {

namespace {

using ProductFn = std::function<Vector(const Vector&, const Vector&)>;

Algebra tabulate(const FieldDesc& field, std::size_t n, const ProductFn& product, Vector unit,
                 std::vector<std::string> names) {
  std::vector<Scalar> mul;
  mul.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector r = product(unit_vector(field, n, i), unit_vector(field, n, j));
      mul.insert(mul.end(), r.begin(), r.end());
    }
  return Algebra(field, n, std::move(mul), std::move(unit), std::move(names));
}

// Multiplication table given as signed basis labels ("-k", "1", "0"); the
// first basis element is the unit.
Algebra from_signed_table(const FieldDesc& field, const std::vector<std::string>& names,
                          const std::vector<std::vector<std::string_view>>& table) {
  const std::size_t n = names.size();
  std::vector<Scalar> mul(n * n * n, Scalar::zero(field));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string_view cell = table[i][j];
      if (cell == "0") continue;
      std::int64_t sign = 1;
      if (cell.front() == '-') {
        sign = -1;
        cell.remove_prefix(1);
      }
      std::size_t k = 0;
      while (k < n && names[k] != cell) ++k;
      if (k == n) throw Error("internal: unknown basis label in table");
      mul[(i * n + j) * n + k] = Scalar(field, sign);
    }
  return Algebra(field, n, std::move(mul), unit_vector(field, n, 0), names);
}

// Identity on the unit, -1 on the remaining basis vectors.
Matrix trace_involution(const FieldDesc& field, std::size_t n) {
  Matrix c = Matrix::identity(field, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i) = -Scalar::one(field);
  return c;
}

Vector cross3(const Vector& x, const Vector& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Vector slice(const Vector& v, std::size_t from, std::size_t len) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(from),
                v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

// Zorn vector matrices: (a, x, y, b) laid out as [a, x1, x2, x3, y1, y2, y3, b].
Vector zorn_product(const Vector& l, const Vector& r) {
  const Scalar &a1 = l[0], &b1 = l[7], &a2 = r[0], &b2 = r[7];
  const Vector x1 = slice(l, 1, 3), y1 = slice(l, 4, 3), x2 = slice(r, 1, 3),
               y2 = slice(r, 4, 3);
  Vector out;
  out.push_back(a1 * a2 + dot(x1, y2));
  Vector x = add(add(scale(a1, x2), scale(b2, x1)), scale(-Scalar::one(a1.field()), cross3(y1, y2)));
  Vector y = add(add(scale(a2, y1), scale(b1, y2)), cross3(x1, x2));
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  out.push_back(b1 * b2 + dot(y1, x2));
  return out;
}

Scalar zorn_norm(const Vector& v) {
  return v[0] * v[7] - dot(slice(v, 1, 3), slice(v, 4, 3));
}

} // namespace

std::optional<Scalar> norm_of(const InvolutiveAlgebra& x, const Element& a) {
  return scalar_part_if_scalar(x.algebra, x.algebra.mul(a, x.conjugate(a)));
}

std::string involutive_invariant_failure(const InvolutiveAlgebra& x, std::size_t samples,
                                         std::uint64_t seed) {
  const Algebra& a = x.algebra;
  const std::size_t n = a.dim();
  if (x.conj.rows() != n || x.conj.cols() != n) return "conjugation matrix has wrong shape";
  if (!(x.conj * x.conj == Matrix::identity(a.field(), n))) return "conj^2 != identity";
  if (!(x.conjugate(a.one()) == a.one())) return "conj(1) != 1";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element ei = a.basis(i), ej = a.basis(j);
      if (!(x.conjugate(a.mul(ei, ej)) == a.mul(x.conjugate(ej), x.conjugate(ei))))
        return "conj is not an anti-automorphism on (" + a.basis_name(i) + ", " +
               a.basis_name(j) + ")";
    }
  std::mt19937_64 rng(seed);
  std::vector<Element> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(a.basis(i));
  for (std::size_t s = 0; s < samples; ++s) probes.push_back(random_element(a, rng));
  for (const auto& e : probes) {
    if (!scalar_part_if_scalar(a, e + x.conjugate(e))) return "a + conj(a) not scalar for " + e.to_string();
    if (!norm_of(x, e)) return "a conj(a) not scalar for " + e.to_string();
  }
  return {};
}

InvolutiveAlgebra cayley_dickson_double(const InvolutiveAlgebra& x) {
  if (auto why = involutive_invariant_failure(x, 10); !why.empty())
    throw InvariantViolation("doubling input is not involutive: " + why);
  const Algebra& a = x.algebra;
  const FieldDesc& f = a.field();
  const std::size_t n = a.dim();

  auto half = [n](const Vector& v, std::size_t which) {
    return Element(slice(v, which * n, n));
  };
  auto product = [&](const Vector& l, const Vector& r) {
    const Element p = half(l, 0), q = half(l, 1), c = half(r, 0), d = half(r, 1);
    const Element first = a.mul(p, c) - a.mul(d, x.conjugate(q));
    const Element second = a.mul(x.conjugate(p), d) + a.mul(c, q);
    Vector out = first.coords();
    out.insert(out.end(), second.coords().begin(), second.coords().end());
    return out;
  };

  Vector unit = a.one().coords();
  unit.resize(2 * n, Scalar::zero(f));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 2 * n; ++i) names.push_back(i == 0 ? "1" : "e" + std::to_string(i));
  Algebra doubled = tabulate(f, 2 * n, product, std::move(unit), std::move(names));

  Matrix conj(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) conj(i, j) = x.conj(i, j);
  for (std::size_t i = n; i < 2 * n; ++i) conj(i, i) = -Scalar::one(f);
  return {std::move(doubled), std::move(conj)};
}

InvolutiveAlgebra standard_tower(int level, const FieldDesc& field) {
  if (level < 0 || level > 4) throw Error("tower level must be between 0 and 4");
  InvolutiveAlgebra cur{Algebra(field, 1, {Scalar::one(field)}, {Scalar::one(field)}, {"1"}),
                        Matrix::identity(field, 1)};
  for (int i = 0; i < level; ++i) cur = cayley_dickson_double(cur);
  return cur;
}

InvolutiveAlgebra split_quaternions_table(const FieldDesc& field) {
  Algebra h = from_signed_table(field, {"1", "i", "j", "k"},
                                {{"1", "i", "j", "k"},
                                 {"i", "1", "k", "j"},
                                 {"j", "-k", "1", "-i"},
                                 {"k", "-j", "i", "-1"}});
  return {std::move(h), trace_involution(field, 4)};
}

InvolutiveAlgebra upper_triangular(const FieldDesc& field) {
  Algebra u = from_signed_table(field, {"1", "u", "v"},
                                {{"1", "u", "v"},
                                 {"u", "0", "u"},
                                 {"v", "-u", "1"}});
  return {std::move(u), trace_involution(field, 3)};
}

InvolutiveAlgebra split_hurwitz(int d, const FieldDesc& field) {
  switch (d) {
  case 2: {
    // idempotents e, f with e + f = 1
    auto product = [](const Vector& l, const Vector& r) {
      return Vector{l[0] * r[0], l[1] * r[1]};
    };
    Algebra a = tabulate(field, 2, product, {Scalar::one(field), Scalar::one(field)}, {"e", "f"});
    Matrix swap(field, 2, 2);
    swap(0, 1) = Scalar::one(field);
    swap(1, 0) = Scalar::one(field);
    return {std::move(a), std::move(swap)};
  }
  case 4:
    return split_quaternions_table(field);
  case 8: {
    Vector unit = zero_vector(field, 8);
    unit[0] = unit[7] = Scalar::one(field);
    Algebra a = tabulate(field, 8, zorn_product, std::move(unit),
                         {"a", "x1", "x2", "x3", "y1", "y2", "y3", "b"});
    Matrix conj(field, 8, 8);
    conj(0, 7) = conj(7, 0) = Scalar::one(field);
    for (std::size_t i = 1; i < 7; ++i) conj(i, i) = -Scalar::one(field);
    if (!check_law(a, Law::Alternative).holds)
      throw InvariantViolation("Zorn self-check: product is not alternative");
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        const Vector ei = unit_vector(field, 8, i), ej = unit_vector(field, 8, j);
        if (!(zorn_norm(zorn_product(ei, ej)) == zorn_norm(ei) * zorn_norm(ej)))
          throw InvariantViolation("Zorn self-check: norm is not multiplicative");
      }
    return {std::move(a), std::move(conj)};
  }
  default:
    throw Error("split Hurwitz algebras exist in dimensions 2, 4 and 8 only");
  }
}

InvolutiveAlgebra h_plus_line(const FieldDesc& field) {
  Algebra a = from_signed_table(field, {"1", "i", "j", "k", "l"},
                                {{"1", "i", "j", "k", "l"},
                                 {"i", "1", "k", "j", "0"},
                                 {"j", "-k", "1", "-i", "0"},
                                 {"k", "-j", "i", "-1", "0"},
                                 {"l", "0", "0", "0", "-1"}});
  return {std::move(a), trace_involution(field, 5)};
}

InvolutiveAlgebra anisotropic_nonflexible(const FieldDesc& field, const Scalar& q_u, const Scalar& q_v) {
  Matrix gram(field, 2, 2);
  gram(0, 0) = q_u;
  gram(1, 1) = q_v;
  CrossTensor cross(8, Scalar::zero(field));
  cross[(0 * 2 + 1) * 2 + 0] = Scalar::one(field);   // u x v = u
  cross[(1 * 2 + 0) * 2 + 0] = -Scalar::one(field);  // v x u = -u
  Algebra built = build_from_osborn(field, gram, cross);
  Algebra a(field, 3, built.structure_constants(), built.one().coords(), {"1", "u", "v"});
  return {std::move(a), trace_involution(field, 3)};
}

bool is_division_algebra_exhaustive(const Algebra& a) {
  if (!a.field().is_prime()) throw FieldError("exhaustive division test needs a prime field");
  const std::int64_t p = a.field().p();
  const std::size_t n = a.dim();
  std::vector<std::int64_t> digits(n, 0);
  while (true) {
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) return true;
    }
    Vector v;
    for (auto d : digits) v.emplace_back(a.field(), d);
    if (rank(a.left_mult_matrix(Element(std::move(v)))) < n) return false;
  }
}

namespace {

// Arithmetic in F_p[t]/(f) for a monic cubic f = t^3 + c2 t^2 + c1 t + c0.
struct CubicExtension {
  FieldDesc field;
  std::array<std::int64_t, 3> f;  // c0, c1, c2

  Vector mul(const Vector& a, const Vector& b) const {
    std::array<Scalar, 5> prod{Scalar::zero(field), Scalar::zero(field), Scalar::zero(field),
                               Scalar::zero(field), Scalar::zero(field)};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) prod[i + j] += a[i] * b[j];
    for (std::size_t d = 4; d >= 3; --d) {
      const Scalar c = prod[d];
      for (std::size_t k = 0; k < 3; ++k) prod[d - 3 + k] -= c * Scalar(field, f[k]);
      prod[d] = Scalar::zero(field);
    }
    return {prod[0], prod[1], prod[2]};
  }

  Vector pow(Vector a, std::int64_t e) const {
    Vector r{Scalar::one(field), Scalar::zero(field), Scalar::zero(field)};
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

bool cubic_has_root(const FieldDesc& field, const std::array<std::int64_t, 3>& f) {
  const std::int64_t p = field.p();
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t v = ((x * x % p * x % p) + f[2] * x % p * x % p + f[1] * x % p + f[0]) % p;
    if (v == 0) return true;
  }
  return false;
}

Vector digits_to_vector(const FieldDesc& field, std::int64_t index, std::int64_t p) {
  // first coordinate most significant
  Vector v(3, Scalar::zero(field));
  for (int i = 2; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = Scalar(field, index % p);
    index /= p;
  }
  return v;
}

} // namespace

DivisionAlgebra3 search_division_3d(std::int64_t p) {
  const FieldDesc field = FieldDesc::prime(p);
  if (p * p * p > 1'000'000) throw Error("p^3 exceeds the exhaustive verification budget");
  const std::int64_t q = p * p * p;

  for (std::int64_t c2 = 0; c2 < p; ++c2)
    for (std::int64_t c1 = 0; c1 < p; ++c1)
      for (std::int64_t c0 = 0; c0 < p; ++c0) {
        const std::array<std::int64_t, 3> f{c0, c1, c2};
        if (cubic_has_root(field, f)) continue;
        const CubicExtension ext{field, f};

        for (std::int64_t ci = 1; ci < q; ++ci) {
          const Vector c = digits_to_vector(field, ci, p);
          // x o y = xy - c x^p y^(p^2)
          auto twisted = [&](const Vector& x, const Vector& y) {
            return sub(ext.mul(x, y), ext.mul(c, ext.mul(ext.pow(x, p), ext.pow(y, p * p))));
          };
          std::vector<Vector> basis{unit_vector(field, 3, 0), unit_vector(field, 3, 1),
                                    unit_vector(field, 3, 2)};
          std::vector<Vector> table(9);
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) table[i * 3 + j] = twisted(basis[i], basis[j]);
          auto circ = [&](const Vector& x, const Vector& y) {
            Vector r = zero_vector(field, 3);
            for (std::size_t i = 0; i < 3; ++i)
              for (std::size_t j = 0; j < 3; ++j) axpy(r, x[i] * y[j], table[i * 3 + j]);
            return r;
          };
          auto left = [&](const Vector& x) {
            std::vector<Vector> cols;
            for (const auto& b : basis) cols.push_back(circ(x, b));
            return Matrix::from_columns(field, 3, cols);
          };
          auto right = [&](const Vector& x) {
            std::vector<Vector> cols;
            for (const auto& b : basis) cols.push_back(circ(b, x));
            return Matrix::from_columns(field, 3, cols);
          };

          bool division = true;
          for (std::int64_t xi = 1; xi < q && division; ++xi)
            if (rank(left(digits_to_vector(field, xi, p))) < 3) division = false;
          if (!division) continue;

          const Vector& e = basis[0];
          const auto re_inv = inverse(right(e)), le_inv = inverse(left(e));
          auto star = [&](const Vector& a, const Vector& b) {
            return circ(*re_inv * a, *le_inv * b);
          };
          std::vector<Scalar> mul;
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
              Vector r = star(basis[i], basis[j]);
              mul.insert(mul.end(), r.begin(), r.end());
            }
          Algebra alg(field, 3, std::move(mul), circ(e, e), {"b0", "b1", "b2"});
          if (!is_division_algebra_exhaustive(alg)) continue;
          if (check_law(alg, Law::Commutative).holds) continue;
          if (is_quadratic(alg).holds) continue;
          std::vector<std::int64_t> twist;
          for (const auto& s : c) twist.push_back(s.residue());
          return {std::move(alg), {f.begin(), f.end()}, std::move(twist)};
        }
      }
  throw SearchExhausted("no 3-dimensional division algebra candidate verified over F_" +
                        std::to_string(p));
}

} // namespace nalg
