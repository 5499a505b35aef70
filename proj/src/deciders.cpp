#include "nalg/deciders.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

#include "nalg/constructions.hpp"
#include "nalg/forms.hpp"

namespace nalg {

std::string to_string(Question q) {
  switch (q) {
  case Question::VNF: return "vnf";
  case Question::Reversible: return "reversible";
  case Question::ZeroDivisorFree: return "zdf";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
  case Status::Yes: return "yes";
  case Status::No: return "no";
  case Status::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
  case Method::Oracle: return "oracle";
  case Method::Criterion: return "criterion";
  case Method::Theorem: return "theorem";
  case Method::WitnessSearch: return "witness-search";
  }
  return "?";
}

Question parse_question(std::string_view text) {
  for (Question q : {Question::VNF, Question::Reversible, Question::ZeroDivisorFree})
    if (to_string(q) == text) return q;
  throw ParseError("unknown question '" + std::string(text) + "'");
}

std::string to_string(SubalgebraKind k) {
  switch (k) {
  case SubalgebraKind::Commutative: return "commutative";
  case SubalgebraKind::IsoU: return "upper-triangular";
  case SubalgebraKind::Other: return "other";
  }
  return "?";
}

bool witness_valid(const Algebra& alg, Question q, const Element& a, const Element& b) {
  const Element ab = alg.mul(a, b), ba = alg.mul(b, a);
  switch (q) {
  case Question::VNF:
    return ab == alg.one() && !(ba == alg.one());
  case Question::Reversible:
    return !a.is_zero() && !b.is_zero() && ab.is_zero() && !ba.is_zero();
  case Question::ZeroDivisorFree:
    return !a.is_zero() && !b.is_zero() && ab.is_zero();
  }
  return false;
}

Verdict verified_no(const Algebra& alg, Question q, Method m, const Element& a, const Element& b,
                    std::string detail) {
  if (!witness_valid(alg, q, a, b))
    throw InvariantViolation("witness " + a.to_string() + ", " + b.to_string() +
                             " does not refute " + to_string(q));
  Verdict v;
  v.question = q;
  v.status = Status::No;
  v.method = m;
  v.witness = Witness{a, b, alg.mul(a, b), alg.mul(b, a)};
  v.detail = std::move(detail);
  return v;
}

Verdict yes(Question q, Method m, std::string theorem, std::string detail) {
  Verdict v;
  v.question = q;
  v.status = Status::Yes;
  v.method = m;
  v.theorem = std::move(theorem);
  v.detail = std::move(detail);
  return v;
}

Verdict unknown(Question q, std::string detail) {
  Verdict v;
  v.question = q;
  v.status = Status::Unknown;
  v.method = Method::Theorem;
  v.detail = std::move(detail);
  return v;
}

namespace {

std::uint64_t element_count(const Algebra& a, std::uint64_t budget) {
  if (!a.field().is_prime())
    throw FieldError("exhaustive enumeration needs a prime field, got " + a.field().to_string());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    total *= static_cast<std::uint64_t>(a.field().p());
    if (total > budget)
      throw BudgetExceeded("p^n exceeds the enumeration budget of " + std::to_string(budget));
  }
  return total;
}

Element element_at(const Algebra& a, std::uint64_t index) {
  const auto p = static_cast<std::uint64_t>(a.field().p());
  Vector v(a.dim(), Scalar::zero(a.field()));
  for (std::size_t i = a.dim(); i-- > 0;) {
    v[i] = Scalar(a.field(), static_cast<std::int64_t>(index % p));
    index /= p;
  }
  return Element(std::move(v));
}

using Hit = std::pair<Element, Element>;

// Smallest index in [begin, end) for which probe returns a hit. Workers scan
// contiguous blocks and stop once a smaller hit is known, so the answer does
// not depend on the worker count.
template <class Probe>
std::optional<Hit> first_hit(std::uint64_t begin, std::uint64_t end, unsigned workers,
                             const Probe& probe) {
  if (workers <= 1 || end - begin < 2 * workers) {
    for (std::uint64_t i = begin; i < end; ++i)
      if (auto h = probe(i)) return h;
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{end};
  std::vector<std::optional<Hit>> found(workers);
  std::vector<std::uint64_t> found_at(workers, end);
  const std::uint64_t block = (end - begin + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t lo = begin + w * block, hi = std::min(end, lo + block);
        for (std::uint64_t i = lo; i < hi && i < best.load(); ++i) {
          if (auto h = probe(i)) {
            found[w] = std::move(h);
            found_at[w] = i;
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      });
    }
  }
  std::size_t arg = 0;
  for (unsigned w = 1; w < workers; ++w)
    if (found_at[w] < found_at[arg]) arg = w;
  return found[arg];
}

} // namespace

Verdict oracle_vnf(const Algebra& a, const EnumerationOptions& opts) {
  const std::uint64_t total = element_count(a, opts.budget);
  const Element one = a.one();
  auto probe = [&](std::uint64_t idx) -> std::optional<Hit> {
    const Element x = element_at(a, idx);
    auto sol = solve(a.left_mult_matrix(x), one.coords());
    if (!sol) return std::nullopt;
    const Matrix right = a.right_mult_matrix(x);
    if (!(right * sol->particular == one.coords())) return Hit{x, Element(sol->particular)};
    for (const auto& k : sol->kernel)
      if (!is_zero(right * k)) return Hit{x, Element(add(sol->particular, k))};
    return std::nullopt;
  };
  if (auto h = first_hit(1, total, opts.workers, probe))
    return verified_no(a, Question::VNF, Method::Oracle, h->first, h->second,
                       "one-sided inverse found by exhaustive scan");
  return yes(Question::VNF, Method::Oracle, {}, "exhaustive scan of " + std::to_string(total) +
                                                   " elements");
}

Verdict oracle_reversible(const Algebra& a, const EnumerationOptions& opts) {
  const std::uint64_t total = element_count(a, opts.budget);
  auto probe = [&](std::uint64_t idx) -> std::optional<Hit> {
    const Element x = element_at(a, idx);
    const auto ker = kernel(a.left_mult_matrix(x));
    if (ker.empty()) return std::nullopt;
    const Matrix right = a.right_mult_matrix(x);
    for (const auto& k : ker)
      if (!is_zero(right * k)) return Hit{x, Element(k)};
    return std::nullopt;
  };
  if (auto h = first_hit(1, total, opts.workers, probe))
    return verified_no(a, Question::Reversible, Method::Oracle, h->first, h->second,
                       "one-sided zero divisor found by exhaustive scan");
  return yes(Question::Reversible, Method::Oracle, {},
             "exhaustive scan of " + std::to_string(total) + " elements");
}

Verdict no_zero_divisors(const Algebra& a, const EnumerationOptions& opts) {
  const std::uint64_t total = element_count(a, opts.budget);
  auto probe = [&](std::uint64_t idx) -> std::optional<Hit> {
    const Element x = element_at(a, idx);
    const auto ker = kernel(a.left_mult_matrix(x));
    if (ker.empty()) return std::nullopt;
    return Hit{x, Element(ker.front())};
  };
  if (auto h = first_hit(1, total, opts.workers, probe))
    return verified_no(a, Question::ZeroDivisorFree, Method::Oracle, h->first, h->second,
                       "zero divisor found by exhaustive scan");
  return yes(Question::ZeroDivisorFree, Method::Oracle, {},
             "every nonzero left multiplication is invertible");
}

namespace {

// A 2-dimensional subspace W = span{w1, w2} of Im A with W x W in W, in
// local coordinates: g is the form on (w1, w2), z = coordinates of w1 x w2.
struct LocalPlane {
  FieldDesc field;
  Scalar g11, g12, g22;
  Scalar z1, z2;

  Scalar form(const Vector& x, const Vector& y) const {
    return x[0] * y[0] * g11 + (x[0] * y[1] + x[1] * y[0]) * g12 + x[1] * y[1] * g22;
  }
  bool commutative() const { return z1.is_zero() && z2.is_zero(); }
};

struct LocalBasis {
  Vector u, v;  // u x v = u, and (u, v) = 0 when (u, u) != 0
};

// Constructive basis: u spans W x W, v solves u x v = u, and is shifted
// along u to make (u, v) = 0 when (u, u) is nonzero.
LocalBasis normalized_basis(const LocalPlane& w) {
  const FieldDesc& f = w.field;
  Vector u{w.z1, w.z2};
  // x x y = det(x, y) (w1 x w2) = det(x, y) u
  Vector v = !u[0].is_zero() ? Vector{Scalar::zero(f), u[0].inverse()}
                             : Vector{-u[1].inverse(), Scalar::zero(f)};
  const Scalar uu = w.form(u, u);
  if (!uu.is_zero()) {
    const Scalar lambda = w.form(u, v) / uu;
    v = sub(v, scale(lambda, u));
  }
  return {std::move(u), std::move(v)};
}

bool is_upper_triangular_type(const LocalPlane& w, const LocalBasis& b) {
  return w.form(b.u, b.u).is_zero() && w.form(b.u, b.v).is_zero() &&
         w.form(b.v, b.v).is_one();
}

struct PlaneWitness {
  Scalar a_alpha;
  Vector a_im;
  Scalar b_alpha;
  Vector b_im;
};

// A pair with ab in F \ {0}, ab != ba, for a non-commutative plane that is not
// of upper triangular type.
PlaneWitness vnf_plane_witness(const LocalPlane& w, const LocalBasis& b) {
  const FieldDesc& f = w.field;
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  if (!w.form(b.u, b.v).is_zero()) return {zero, b.u, -one, b.v};        // (0,u)(-1,v) = (u,v)
  if (!w.form(b.v, b.v).is_one()) return {one, add(b.u, b.v), -one, b.v};  // = (v,v) - 1
  return {one, add(b.u, b.v), zero, b.u};                                  // = (u,u)
}

// A pair with ab = 0 != ba for a non-commutative plane.
PlaneWitness reversible_plane_witness(const LocalPlane& w, const LocalBasis& b) {
  const FieldDesc& f = w.field;
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  const Scalar uv = w.form(b.u, b.v), vv = w.form(b.v, b.v);
  if (uv.is_zero()) return {one, b.v, zero, b.u};  // (1,v)(0,u) = 0
  if ((one - vv).is_zero())
    return {one, add(b.u, b.v), one, sub(b.u, b.v)};  // (1,u+v)(1,u-v) = 1 - (v,v)
  const Vector y = add(scale(one - vv, b.u), scale(uv, b.v));
  return {one, b.v, -uv, y};  // (1,v)(-(u,v), y) = 0
}

Element plane_element(const OsbornData& data, const Vector& w1, const Vector& w2,
                      const Scalar& alpha, const Vector& local) {
  Vector im = add(scale(local[0], w1), scale(local[1], w2));
  return data.join(alpha, im);
}

void require_involutive_prime(const Algebra& a, const OsbornData& data) {
  if (!a.field().is_prime()) throw FieldError("criterion deciders need a prime field");
  if (!involutive_criterion(data).holds)
    throw Error("criterion deciders need an involutive algebra (symmetric Osborn form)");
}

std::uint64_t plane_count(std::size_t m, std::int64_t p) {
  // number of 2-dimensional subspaces of F_p^m
  if (m < 2) return 0;
  unsigned __int128 num = 1, den = 1, pp = static_cast<unsigned __int128>(p);
  unsigned __int128 pm = 1;
  for (std::size_t i = 0; i < m; ++i) pm *= pp;
  num = (pm - 1) * (pm - pp);
  den = (pp * pp - 1) * (pp * pp - pp);
  const unsigned __int128 r = num / den;
  return r > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

// Visits ×-closed planes of Im A in lexicographic order of their reduced
// echelon basis; stops when the visitor returns true.
template <class Visit>
void for_each_closed_plane(const OsbornData& data, const EnumerationOptions& opts,
                           const Visit& visit) {
  const std::size_t m = data.m();
  const FieldDesc& f = data.field();
  const std::int64_t p = f.p();
  if (plane_count(m, p) > opts.budget)
    throw BudgetExceeded("number of planes in Im A exceeds the budget of " +
                         std::to_string(opts.budget));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<std::size_t> free1, free2;
      for (std::size_t k = i + 1; k < m; ++k)
        if (k != j) free1.push_back(k);
      for (std::size_t k = j + 1; k < m; ++k) free2.push_back(k);
      const std::size_t nfree = free1.size() + free2.size();
      std::vector<std::int64_t> digits(nfree, 0);
      while (true) {
        Vector w1 = unit_vector(f, m, i), w2 = unit_vector(f, m, j);
        for (std::size_t t = 0; t < free1.size(); ++t) w1[free1[t]] = Scalar(f, digits[t]);
        for (std::size_t t = 0; t < free2.size(); ++t)
          w2[free2[t]] = Scalar(f, digits[free1.size() + t]);
        const Vector z = data.cross_coords(w1, w2);
        // echelon rows: coordinates of z in (w1, w2) are z[i], z[j]
        const Scalar z1 = z[i], z2 = z[j];
        if (add(scale(z1, w1), scale(z2, w2)) == z) {
          LocalPlane plane{f, data.form(w1, w1), data.form(w1, w2), data.form(w2, w2), z1, z2};
          if (visit(w1, w2, plane)) return;
        }
        std::size_t pos = nfree;
        bool done = true;
        while (pos > 0) {
          --pos;
          if (++digits[pos] < p) {
            done = false;
            break;
          }
          digits[pos] = 0;
        }
        if (done) break;
      }
    }
}

std::vector<Element> plane_subalgebra(const OsbornData& data, const Vector& w1, const Vector& w2) {
  return {data.unit(), data.im_element(w1), data.im_element(w2)};
}

} // namespace

SubalgebraClass classify_3dim(const Algebra& b, const OsbornData& data) {
  if (b.dim() != 3 || data.m() != 2) throw Error("classify_3dim needs a 3-dimensional algebra");
  if (!involutive_criterion(data).holds) throw Error("classify_3dim needs an involutive algebra");
  const FieldDesc& f = b.field();
  const Vector e1 = unit_vector(f, 2, 0), e2 = unit_vector(f, 2, 1);
  const Vector z = data.cross_coords(e1, e2);
  LocalPlane plane{f, data.gram()(0, 0), data.gram()(0, 1), data.gram()(1, 1), z[0], z[1]};
  SubalgebraClass out;
  if (plane.commutative()) return out;
  const LocalBasis lb = normalized_basis(plane);
  out.kind = is_upper_triangular_type(plane, lb) ? SubalgebraKind::IsoU : SubalgebraKind::Other;
  out.basis = std::make_pair(data.im_element(lb.u), data.im_element(lb.v));
  return out;
}

Verdict criterion_vnf(const Algebra& a, const OsbornData& data, const EnumerationOptions& opts) {
  require_involutive_prime(a, data);
  std::optional<Verdict> result;
  for_each_closed_plane(data, opts, [&](const Vector& w1, const Vector& w2, const LocalPlane& pl) {
    if (pl.commutative()) return false;
    const LocalBasis lb = normalized_basis(pl);
    if (is_upper_triangular_type(pl, lb)) return false;
    const PlaneWitness pw = vnf_plane_witness(pl, lb);
    const Element x = plane_element(data, w1, w2, pw.a_alpha, pw.a_im);
    const Element y = plane_element(data, w1, w2, pw.b_alpha, pw.b_im);
    const auto mu = scalar_part_if_scalar(a, a.mul(x, y));
    if (!mu || mu->is_zero()) throw Error("internal: plane witness product is not a unit scalar");
    result = verified_no(a, Question::VNF, Method::Criterion, mu->inverse() * x, y,
                         "3-dimensional subalgebra that is neither commutative nor associative");
    result->subalgebra = plane_subalgebra(data, w1, w2);
    return true;
  });
  if (result) return *result;
  return yes(Question::VNF, Method::Criterion, {},
             "every 3-dimensional subalgebra is commutative or of upper triangular type");
}

Verdict criterion_reversible(const Algebra& a, const OsbornData& data,
                             const EnumerationOptions& opts) {
  require_involutive_prime(a, data);
  std::optional<Verdict> result;
  for_each_closed_plane(data, opts, [&](const Vector& w1, const Vector& w2, const LocalPlane& pl) {
    if (pl.commutative()) return false;
    const LocalBasis lb = normalized_basis(pl);
    const PlaneWitness pw = reversible_plane_witness(pl, lb);
    const Element x = plane_element(data, w1, w2, pw.a_alpha, pw.a_im);
    const Element y = plane_element(data, w1, w2, pw.b_alpha, pw.b_im);
    result = verified_no(a, Question::Reversible, Method::Criterion, x, y,
                         "non-commutative 3-dimensional subalgebra");
    result->subalgebra = plane_subalgebra(data, w1, w2);
    return true;
  });
  if (result) return *result;
  return yes(Question::Reversible, Method::Criterion, {},
             "every 3-dimensional subalgebra is commutative");
}

FastDecision decide_fast(const Algebra& a, const FastOptions& opts) {
  FastDecision d{unknown(Question::VNF, "no rule applies"),
                 unknown(Question::Reversible, "no rule applies")};
  auto settle = [](Verdict& v, Question q, const std::string& rule, const std::string& why) {
    if (v.status == Status::Unknown) v = yes(q, Method::Theorem, rule, why);
  };

  if (check_law(a, Law::Associative).holds)
    settle(d.vnf, Question::VNF, "associative", "finite-dimensional associative algebra");
  const bool alternative = check_law(a, Law::Alternative).holds;
  if (alternative)
    settle(d.vnf, Question::VNF, "alternative", "finite-dimensional alternative algebra");

  const bool flexible = check_law(a, Law::Flexible).holds;
  QuadraticVerdict qv = is_quadratic(a);
  const bool quadratic = qv.holds;
  std::optional<OsbornData> data;
  if (quadratic) data.emplace(a, std::move(qv.im_basis));

  if (flexible && quadratic) {
    const IsotropyVerdict iso = isotropy(norm_form(*data), opts.isotropy_height);
    if (iso.status == Isotropy::Anisotropic) {
      const std::string why = "flexible quadratic algebra with anisotropic norm (" + iso.method + ")";
      settle(d.vnf, Question::VNF, "anisotropic-norm", why);
      settle(d.reversible, Question::Reversible, "anisotropic-norm", why);
    }
  }

  if (a.field().is_prime() && (d.vnf.status == Status::Unknown ||
                               d.reversible.status == Status::Unknown)) {
    std::optional<Verdict> nzd;
    try {
      nzd = no_zero_divisors(a, opts.enumeration);
    } catch (const BudgetExceeded&) {
    }
    if (nzd && nzd->status == Status::Yes) {
      settle(d.reversible, Question::Reversible, "no-zero-divisors", "algebra without zero divisors");
      if (flexible || quadratic)
        settle(d.vnf, Question::VNF, "no-zero-divisors",
               "flexible or quadratic algebra without zero divisors");
    }
  }

  if (quadratic && involutive_criterion(*data).holds && d.reversible.status == Status::Yes)
    settle(d.vnf, Question::VNF, "reversible-involutive", "reversible involutive algebra");
  return d;
}

std::vector<Scalar> height_grid(int h) {
  const FieldDesc q = FieldDesc::rational();
  struct Entry {
    std::int64_t height, den, absnum;
    bool negative;
  };
  std::vector<Entry> entries{{0, 1, 0, false}};
  for (std::int64_t den = 1; den <= h; ++den)
    for (std::int64_t num = 1; num <= h; ++num) {
      if (std::gcd(num, den) != 1) continue;
      const std::int64_t ht = std::max(num, den);
      entries.push_back({ht, den, num, false});
      entries.push_back({ht, den, num, true});
    }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.height, x.den, x.absnum, x.negative) <
           std::tie(y.height, y.den, y.absnum, y.negative);
  });
  std::vector<Scalar> out;
  for (const auto& e : entries) out.emplace_back(q, e.negative ? -e.absnum : e.absnum, e.den);
  return out;
}

std::vector<Witness> witness_search_all_q(const Algebra& a, Question q, int height,
                                          std::size_t limit, std::uint64_t budget) {
  if (!a.field().is_rational()) throw FieldError("witness_search_q works over Q");
  if (q == Question::ZeroDivisorFree) throw Error("witness search covers vnf and reversible");
  const std::vector<Scalar> grid = height_grid(height);
  const std::size_t n = a.dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= grid.size();
    if (total > budget) throw BudgetExceeded("height grid exceeds the search budget");
  }
  auto at = [&](std::uint64_t idx) {
    Vector v(n, grid[0]);
    for (std::size_t i = n; i-- > 0;) {
      v[i] = grid[idx % grid.size()];
      idx /= grid.size();
    }
    return Element(std::move(v));
  };

  const Element one = a.one();
  std::vector<Witness> hits;
  for (std::uint64_t ia = 1; ia < total && hits.size() < limit; ++ia) {
    const Element x = at(ia);
    const Matrix left = a.left_mult_matrix(x), right = a.right_mult_matrix(x);
    // Skip x when no b over Q at all can complete a violation: the
    // candidate b form a subspace S on which the conditions are linear.
    if (q == Question::VNF) {
      // S = {b : xb in F1}, kernel of [L_x | -1] projected to b
      Matrix m(a.field(), n, n + 1);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = left(r, c);
        m(r, n) = -one[r];
      }
      bool scalar_nonzero = false, noncommuting = false;
      for (const auto& k : kernel(m)) {
        Vector b(k.begin(), k.end() - 1);
        if (!k.back().is_zero()) scalar_nonzero = true;
        if (!(left * b == right * b)) noncommuting = true;
      }
      if (!scalar_nonzero || !noncommuting) continue;
    } else {
      bool any = false;
      for (const auto& k : kernel(left))
        if (!is_zero(right * k)) any = true;
      if (!any) continue;
    }
    for (std::uint64_t ib = 1; ib < total && hits.size() < limit; ++ib) {
      const Element y = at(ib);
      const Element xy = Element(left * y.coords());
      if (q == Question::VNF) {
        const auto mu = scalar_part_if_scalar(a, xy);
        if (!mu || mu->is_zero()) continue;
      } else if (!xy.is_zero()) {
        continue;
      }
      const Element yx = Element(right * y.coords());
      if (xy == yx) continue;
      hits.push_back({x, y, xy, yx});
    }
  }
  return hits;
}

std::optional<Verdict> witness_search_q(const Algebra& a, Question q, int height,
                                        std::uint64_t budget) {
  auto hits = witness_search_all_q(a, q, height, 1, budget);
  if (hits.empty()) return std::nullopt;
  const Witness& w = hits.front();
  if (q == Question::VNF) {
    const Scalar mu = *scalar_part_if_scalar(a, w.ab);
    return verified_no(a, q, Method::WitnessSearch, mu.inverse() * w.a, w.b,
                       "bounded search at height " + std::to_string(height));
  }
  return verified_no(a, q, Method::WitnessSearch, w.a, w.b,
                     "bounded search at height " + std::to_string(height));
}

Algebra fuzz_instance(std::size_t m, std::int64_t p, std::uint64_t seed, std::size_t index) {
  const FieldDesc f = FieldDesc::prime(p);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  Matrix gram(f, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) gram(i, j) = gram(j, i) = random_scalar(f, rng);
  CrossTensor cross(m * m * m, Scalar::zero(f));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar t = random_scalar(f, rng);
        cross[(i * m + j) * m + k] = t;
        cross[(j * m + i) * m + k] = -t;
      }
  return build_from_osborn(f, gram, cross);
}

FuzzReport fuzz_crossvalidate(std::size_t count, std::size_t m, std::int64_t p,
                              std::uint64_t seed, bool inject_fixtures,
                              const EnumerationOptions& opts) {
  FuzzReport rep;
  const FieldDesc f = FieldDesc::prime(p);

  auto run = [&](std::size_t index, const Algebra& a, std::optional<Status> expect_vnf,
                 std::optional<Status> expect_rev) {
    const OsbornData data = decompose(a);
    const Verdict ov = oracle_vnf(a, opts), orv = oracle_reversible(a, opts);
    const Verdict cv = criterion_vnf(a, data, opts), crv = criterion_reversible(a, data, opts);
    ++rep.instances;
    if (ov.status == Status::Yes) ++rep.vnf_yes;
    if (orv.status == Status::Yes) ++rep.reversible_yes;
    std::string what;
    if (cv.status != ov.status)
      what += "criterion_vnf=" + to_string(cv.status) + " oracle_vnf=" + to_string(ov.status) + "; ";
    if (crv.status != orv.status)
      what += "criterion_reversible=" + to_string(crv.status) +
              " oracle_reversible=" + to_string(orv.status) + "; ";
    if (orv.status == Status::Yes && ov.status != Status::Yes) {
      ++rep.reversible_not_vnf;
      what += "reversible but not VNF; ";
    }
    if (expect_vnf && ov.status != *expect_vnf) what += "fixture VNF verdict mismatch; ";
    if (expect_rev && orv.status != *expect_rev) what += "fixture reversibility verdict mismatch; ";
    if (!what.empty()) rep.disagreements.push_back({index, a, what});
  };

  if (inject_fixtures) {
    run(static_cast<std::size_t>(-1), upper_triangular(f).algebra, Status::Yes, Status::No);
    run(static_cast<std::size_t>(-2), split_quaternions_table(f).algebra, Status::Yes, Status::No);
  }
  for (std::size_t i = 0; i < count; ++i)
    run(i, fuzz_instance(m, p, seed, i), std::nullopt, std::nullopt);
  return rep;
}

} // namespace nalg
