#pragma once

// Dense polynomials of degree <= 6 over the rings of modarith.hpp.
//
// Poly<E> is a plain value: seven coefficients (index i holds the x^i
// coefficient) and an explicit degree, -1 for the zero polynomial. All
// operations take the ring context as their first argument and return
// normalised polynomials (no leading zeros).

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "g2euler/modarith.hpp"

namespace g2euler {

inline constexpr int kMaxDegree = 6;

template <class E>
struct Poly {
  std::array<E, kMaxDegree + 1> c{};
  int deg = -1;

  const E& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  E& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  bool is_zero() const { return deg < 0; }
  const E& lead() const { return c[static_cast<std::size_t>(deg)]; }
};

using IntPoly = Poly<mpz_class>;
using FpPoly = Poly<u64>;
using Fp2Poly = Poly<Fp2Elt>;
using OrderPoly = Poly<OrderElt>;

template <class R>
using PolyOf = Poly<typename R::Elt>;

// ---------------------------------------------------------------------------
// Construction and basic ring operations

template <class R>
void normalize(const R& ring, PolyOf<R>& f) {
  int d = kMaxDegree;
  while (d >= 0 && ring.is_zero(f[d])) --d;
  f.deg = d;
}

template <class R>
PolyOf<R> make_poly(const R& ring, const std::vector<typename R::Elt>& coeffs) {
  PolyOf<R> f;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > static_cast<std::size_t>(kMaxDegree)) {
      if (!ring.is_zero(coeffs[i])) fail(ErrorCode::DegreeError, "polynomial degree exceeds 6");
      continue;
    }
    f[static_cast<int>(i)] = coeffs[i];
  }
  normalize(ring, f);
  return f;
}

template <class R>
PolyOf<R> from_ints(const R& ring, std::initializer_list<i64> coeffs) {
  std::vector<typename R::Elt> v;
  for (i64 x : coeffs) v.push_back(ring.from_int(x));
  return make_poly(ring, v);
}

IntPoly int_poly(std::initializer_list<long> coeffs);
IntPoly int_poly(const std::vector<mpz_class>& coeffs);

template <class R>
PolyOf<R> constant(const R& ring, const typename R::Elt& a) {
  PolyOf<R> f;
  f[0] = a;
  normalize(ring, f);
  return f;
}

template <class R>
PolyOf<R> monomial_x(const R& ring) {
  PolyOf<R> f;
  f[1] = ring.one();
  f.deg = 1;
  return f;
}

template <class R>
bool equal(const R& ring, const PolyOf<R>& f, const PolyOf<R>& g) {
  if (f.deg != g.deg) return false;
  for (int i = 0; i <= f.deg; ++i)
    if (!ring.eq(f[i], g[i])) return false;
  return true;
}

template <class R>
PolyOf<R> add(const R& ring, const PolyOf<R>& f, const PolyOf<R>& g) {
  PolyOf<R> h;
  for (int i = 0; i <= kMaxDegree; ++i) h[i] = ring.add(f[i], g[i]);
  normalize(ring, h);
  return h;
}

template <class R>
PolyOf<R> sub(const R& ring, const PolyOf<R>& f, const PolyOf<R>& g) {
  PolyOf<R> h;
  for (int i = 0; i <= kMaxDegree; ++i) h[i] = ring.sub(f[i], g[i]);
  normalize(ring, h);
  return h;
}

template <class R>
PolyOf<R> scale(const R& ring, const PolyOf<R>& f, const typename R::Elt& s) {
  PolyOf<R> h;
  for (int i = 0; i <= f.deg; ++i) h[i] = ring.mul(f[i], s);
  normalize(ring, h);
  return h;
}

template <class R>
PolyOf<R> mul(const R& ring, const PolyOf<R>& f, const PolyOf<R>& g) {
  PolyOf<R> h;
  if (f.is_zero() || g.is_zero()) return h;
  if (f.deg + g.deg > kMaxDegree) fail(ErrorCode::DegreeError, "product degree exceeds 6");
  for (int i = 0; i <= f.deg; ++i)
    for (int j = 0; j <= g.deg; ++j) h[i + j] = ring.add(h[i + j], ring.mul(f[i], g[j]));
  normalize(ring, h);
  return h;
}

template <class R>
PolyOf<R> pow(const R& ring, const PolyOf<R>& f, int e) {
  PolyOf<R> r = constant(ring, ring.one());
  for (int i = 0; i < e; ++i) r = mul(ring, r, f);
  return r;
}

template <class R>
PolyOf<R> derivative(const R& ring, const PolyOf<R>& f) {
  PolyOf<R> h;
  for (int i = 1; i <= f.deg; ++i) h[i - 1] = ring.mul(ring.from_int(i), f[i]);
  normalize(ring, h);
  return h;
}

template <class R>
typename R::Elt eval(const R& ring, const PolyOf<R>& f, const typename R::Elt& x) {
  typename R::Elt acc = ring.zero();
  for (int i = f.deg; i >= 0; --i) acc = ring.add(ring.mul(acc, x), f[i]);
  return acc;
}

/// f(x + r), by repeated synthetic division.
template <class R>
PolyOf<R> taylor_shift(const R& ring, PolyOf<R> f, const typename R::Elt& r) {
  if (ring.is_zero(r)) return f;
  for (int i = 0; i < f.deg; ++i)
    for (int j = f.deg - 1; j >= i; --j) f[j] = ring.add(f[j], ring.mul(r, f[j + 1]));
  normalize(ring, f);
  return f;
}

/// x^n f(1/x) (requires deg f <= n <= 6).
template <class R>
PolyOf<R> reverse(const R& ring, const PolyOf<R>& f, int n) {
  if (f.deg > n || n > kMaxDegree) fail(ErrorCode::DegreeError, "reverse: degree out of range");
  PolyOf<R> h;
  for (int i = 0; i <= n; ++i) h[n - i] = f[i];
  normalize(ring, h);
  return h;
}

// ---------------------------------------------------------------------------
// Field-only operations

template <class F>
PolyOf<F> make_monic(const F& field, const PolyOf<F>& f) {
  if (f.is_zero()) return f;
  return scale(field, f, field.inv(f.lead()));
}

template <class F>
std::pair<PolyOf<F>, PolyOf<F>> divrem(const F& field, const PolyOf<F>& a, const PolyOf<F>& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  PolyOf<F> q, r = a;
  const auto lead_inv = field.inv(b.lead());
  while (r.deg >= b.deg) {
    int shift = r.deg - b.deg;
    auto t = field.mul(r.lead(), lead_inv);
    q[shift] = t;
    for (int i = 0; i <= b.deg; ++i) r[i + shift] = field.sub(r[i + shift], field.mul(t, b[i]));
    r[r.deg] = field.zero();
    normalize(field, r);
  }
  normalize(field, q);
  return {q, r};
}

template <class F>
bool divides(const F& field, const PolyOf<F>& g, const PolyOf<F>& f) {
  return divrem(field, f, g).second.is_zero();
}

/// Exact quotient f / g; throws InexactDivision when g does not divide f.
template <class F>
PolyOf<F> div_exact(const F& field, const PolyOf<F>& f, const PolyOf<F>& g) {
  auto [q, r] = divrem(field, f, g);
  if (!r.is_zero()) fail(ErrorCode::InexactDivision, "polynomial does not divide");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
PolyOf<F> gcd(const F& field, PolyOf<F> a, PolyOf<F> b) {
  while (!b.is_zero()) {
    auto r = divrem(field, a, b).second;
    a = b;
    b = r;
  }
  return make_monic(field, a);
}

/// Value r of a monic linear polynomial x - r.
template <class F>
typename F::Elt linear_root(const F& field, const PolyOf<F>& f) {
  if (f.deg != 1) fail(ErrorCode::DegreeError, "linear_root: polynomial is not linear");
  return field.neg(field.divexact(f[0], f[1]));
}

/// Irreducibility for degree <= 3 (no roots in the field), by enumeration.
template <class F>
bool is_irreducible_small(const F& field, const PolyOf<F>& g) {
  if (g.deg <= 0) return false;
  if (g.deg == 1) return true;
  if (g.deg > 3) fail(ErrorCode::Unsupported, "is_irreducible_small: degree above 3");
  for (u64 i = 0; i < field.size(); ++i)
    if (field.is_zero(eval(field, g, field.element(i)))) return false;
  return true;
}

/// Calls visit(g) for every monic irreducible g over the field with deg g <= max_deg (<= 3).
template <class F, class Visit>
void for_each_monic_irreducible(const F& field, int max_deg, Visit&& visit) {
  const u64 q = field.size();
  for (int d = 1; d <= std::min(max_deg, 3); ++d) {
    u64 count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (u64 idx = 0; idx < count; ++idx) {
      PolyOf<F> g;
      g[d] = field.one();
      u64 rest = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = field.element(rest % q);
        rest /= q;
      }
      g.deg = d;
      if (d == 1 || is_irreducible_small(field, g)) visit(g);
    }
  }
}

/// Multiplicity of g in f (f nonzero, deg g >= 1).
template <class F>
int multiplicity(const F& field, const PolyOf<F>& g, PolyOf<F> f) {
  int e = 0;
  for (;;) {
    auto [q, r] = divrem(field, f, g);
    if (!r.is_zero()) return e;
    f = q;
    ++e;
  }
}

template <class F>
void require_gcd_k_args(const PolyOf<F>& f, int k) {
  if (k <= 0) fail(ErrorCode::InvalidArgument, "gcd_k requires k >= 1");
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "gcd_k of the zero polynomial");
}

/// gcd(f, f', ..., f^(k-1)), monic. Equals gcd_k(f) when char > deg f.
template <class F>
PolyOf<F> gcd_k_derivative(const F& field, const PolyOf<F>& f, int k) {
  require_gcd_k_args<F>(f, k);
  PolyOf<F> g = f, d = f;
  for (int i = 1; i < k; ++i) {
    d = derivative(field, d);
    g = gcd(field, g, d);
  }
  return make_monic(field, g);
}

/// Product of g^(v_g(f) - k + 1) over monic irreducible g with g^k | f.
template <class F>
PolyOf<F> gcd_k_exhaustive(const F& field, const PolyOf<F>& f, int k) {
  require_gcd_k_args<F>(f, k);
  if (k == 1) return make_monic(field, f);
  PolyOf<F> result = constant(field, field.one());
  for_each_monic_irreducible(field, f.deg / k, [&](const PolyOf<F>& g) {
    int e = multiplicity(field, g, f);
    if (e >= k) result = mul(field, result, pow(field, g, e - k + 1));
  });
  return result;
}

template <class F>
PolyOf<F> gcd_k(const F& field, const PolyOf<F>& f, int k) {
  require_gcd_k_args<F>(f, k);
  if (field.characteristic() > static_cast<u64>(f.deg)) return gcd_k_derivative(field, f, k);
  return gcd_k_exhaustive(field, f, k);
}

/// Leading coefficient times the product of the distinct monic irreducible factors.
template <class F>
PolyOf<F> squarefree_part(const F& field, const PolyOf<F>& f) {
  if (f.deg <= 0) return f;
  if (field.characteristic() > static_cast<u64>(f.deg))
    return div_exact(field, f, gcd(field, f, derivative(field, f)));
  PolyOf<F> r = f;
  for_each_monic_irreducible(field, f.deg / 2, [&](const PolyOf<F>& g) {
    for (;;) {
      auto [q, rem] = divrem(field, r, g);
      if (!rem.is_zero() || !divides(field, g, q)) break;
      r = q;
    }
  });
  return r;
}

// ---------------------------------------------------------------------------
// Discriminants (rings with exact division: Z, F_p, F_{p^2})

template <class R>
typename R::Elt det_bareiss(const R& ring, std::vector<std::vector<typename R::Elt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return ring.one();
  bool negate = false;
  typename R::Elt prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring.is_zero(m[k][k])) {
      std::size_t i = k + 1;
      while (i < n && ring.is_zero(m[i][k])) ++i;
      if (i == n) return ring.zero();
      std::swap(m[i], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto t = ring.sub(ring.mul(m[i][j], m[k][k]), ring.mul(m[i][k], m[k][j]));
        m[i][j] = ring.divexact(t, prev);
      }
    }
    prev = m[k][k];
  }
  auto d = m[n - 1][n - 1];
  return negate ? ring.neg(d) : d;
}

/// Sylvester resultant of a (formal degree da) and b (formal degree db).
template <class R>
typename R::Elt resultant(const R& ring, const PolyOf<R>& a, int da, const PolyOf<R>& b, int db) {
  const std::size_t n = static_cast<std::size_t>(da + db);
  std::vector<std::vector<typename R::Elt>> m(n, std::vector<typename R::Elt>(n, ring.zero()));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[static_cast<std::size_t>(db + i)][static_cast<std::size_t>(i + j)] = b[db - j];
  return det_bareiss(ring, std::move(m));
}

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f), for any degree 2..6.
template <class R>
typename R::Elt disc_sylvester(const R& ring, const PolyOf<R>& f) {
  const int n = f.deg;
  if (n < 2 || n > kMaxDegree) fail(ErrorCode::DegreeError, "disc: degree must be in 2..6");
  auto res = resultant(ring, f, n, derivative(ring, f), n - 1);
  auto d = ring.divexact(res, f.lead());
  return ((n * (n - 1) / 2) % 2 == 1) ? ring.neg(d) : d;
}

template <class R>
typename R::Elt disc(const R& ring, const PolyOf<R>& f) {
  const auto k = [&](i64 v) { return ring.from_int(v); };
  const auto m = [&](std::initializer_list<typename R::Elt> xs) {
    auto acc = ring.one();
    for (const auto& x : xs) acc = ring.mul(acc, x);
    return acc;
  };
  switch (f.deg) {
    case 2: {
      const auto &a = f[2], &b = f[1], &c = f[0];
      return ring.sub(m({b, b}), m({k(4), a, c}));
    }
    case 3: {
      const auto &a = f[3], &b = f[2], &c = f[1], &d = f[0];
      auto s = m({b, b, c, c});
      s = ring.sub(s, m({k(4), a, c, c, c}));
      s = ring.sub(s, m({k(4), b, b, b, d}));
      s = ring.sub(s, m({k(27), a, a, d, d}));
      s = ring.add(s, m({k(18), a, b, c, d}));
      return s;
    }
    case 4: {
      const auto &a = f[4], &b = f[3], &c = f[2], &d = f[1], &e = f[0];
      auto s = m({k(256), a, a, a, e, e, e});
      s = ring.sub(s, m({k(192), a, a, b, d, e, e}));
      s = ring.sub(s, m({k(128), a, a, c, c, e, e}));
      s = ring.add(s, m({k(144), a, a, c, d, d, e}));
      s = ring.sub(s, m({k(27), a, a, d, d, d, d}));
      s = ring.add(s, m({k(144), a, b, b, c, e, e}));
      s = ring.sub(s, m({k(6), a, b, b, d, d, e}));
      s = ring.sub(s, m({k(80), a, b, c, c, d, e}));
      s = ring.add(s, m({k(18), a, b, c, d, d, d}));
      s = ring.add(s, m({k(16), a, c, c, c, c, e}));
      s = ring.sub(s, m({k(4), a, c, c, c, d, d}));
      s = ring.sub(s, m({k(27), b, b, b, b, e, e}));
      s = ring.add(s, m({k(18), b, b, b, c, d, e}));
      s = ring.sub(s, m({k(4), b, b, b, d, d, d}));
      s = ring.sub(s, m({k(4), b, b, c, c, c, e}));
      s = ring.add(s, m({b, b, c, c, d, d}));
      return s;
    }
    default:
      return disc_sylvester(ring, f);
  }
}

// ---------------------------------------------------------------------------
// Reduction, lifting, substitution

/// Coefficient-wise reduction Z[x] -> F_p[x] or O[x] -> kappa[x]; the degree may drop.
template <class R>
Poly<typename R::Residue::Elt> reduce(const R& ring, const PolyOf<R>& f) {
  Poly<typename R::Residue::Elt> h;
  for (int i = 0; i <= f.deg; ++i) h[i] = ring.reduce(f[i]);
  normalize(ring.residue_field(), h);
  return h;
}

/// Coefficient-wise lift with representatives in [0, p-1].
template <class R>
PolyOf<R> lift(const R& ring, const Poly<typename R::Residue::Elt>& f) {
  PolyOf<R> h;
  for (int i = 0; i <= f.deg; ++i) h[i] = ring.lift(f[i]);
  normalize(ring, h);
  return h;
}

OrderPoly embed(const QuadOrder& order, const IntPoly& f);

/// f(p^e x + r) / p^k with exact division checked coefficient-wise (Z or O).
template <class R>
PolyOf<R> shift_scale(const R& ring, const PolyOf<R>& f, int e, const typename R::Elt& r, int k) {
  if (e < 0 || k < 0) fail(ErrorCode::InvalidArgument, "shift_scale: negative exponent");
  PolyOf<R> g = taylor_shift(ring, f, r);
  const unsigned long p = static_cast<unsigned long>(ring.prime());
  mpz_class pk;
  for (int i = 0; i <= g.deg; ++i) {
    const int t = i * e - k;
    if (t >= 0) {
      if (t > 0) {
        mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(t));
        g[i] = ring.scale(g[i], pk);
      }
    } else {
      mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(-t));
      g[i] = ring.divide_checked(g[i], pk);
    }
  }
  normalize(ring, g);
  return g;
}

/// 4f + h^2, the odd-characteristic model of y^2 + h y = f.
IntPoly complete_square(const IntPoly& f, const IntPoly& h);

std::string to_string(const IntPoly& f);
std::string to_string(const FpPoly& f);
std::string to_string(const Fp2Poly& f);

}  // namespace g2euler
