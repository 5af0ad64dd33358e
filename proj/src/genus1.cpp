#include "g2euler/genus1.hpp"

#include <algorithm>
#include <optional>

namespace g2euler {

namespace {

// Quadratic character by table lookup; F_{p^2} goes through the norm.
class SquareTable {
 public:
  explicit SquareTable(u64 p) : is_square_(p, 0) {
    for (u64 x = 1; x <= (p - 1) / 2; ++x) is_square_[mulmod(x, x, p)] = 1;
  }
  int chi(const PrimeField&, u64 v) const { return v == 0 ? 0 : (is_square_[v] ? 1 : -1); }
  int chi(const QuadField& k, const Fp2Elt& v) const {
    if (k.is_zero(v)) return 0;
    return is_square_[k.norm(v)] ? 1 : -1;
  }

 private:
  std::vector<char> is_square_;
};

template <class F>
i64 points_at_infinity(const Genus1Model<F>& m) {
  if (m.g.deg == 3) return 1;
  return 1 + m.field.chi(m.g.lead());
}

template <class F>
void require_countable(const Genus1Model<F>& m, u64 limit) {
  validate_model(m);
  if (m.field.size() > limit) fail(ErrorCode::FieldTooLarge, "field too large for exhaustive counting");
}

// Affine Weierstrass arithmetic on y^2 = x^3 + A x + B (B is never needed).
template <class F>
struct Point {
  typename F::Elt x{}, y{};
  bool inf = true;
};

template <class F>
class ShortCurve {
 public:
  ShortCurve(const F& field, typename F::Elt a) : k_(field), a_(a) {}

  Point<F> neg(const Point<F>& p) const { return p.inf ? p : Point<F>{p.x, k_.neg(p.y), false}; }

  Point<F> add(const Point<F>& p, const Point<F>& q) const {
    if (p.inf) return q;
    if (q.inf) return p;
    typename F::Elt lambda;
    if (k_.eq(p.x, q.x)) {
      if (!k_.eq(p.y, q.y) || k_.is_zero(p.y)) return {};
      auto num = k_.add(k_.mul(k_.from_int(3), k_.mul(p.x, p.x)), a_);
      lambda = k_.mul(num, k_.inv(k_.add(p.y, p.y)));
    } else {
      lambda = k_.mul(k_.sub(q.y, p.y), k_.inv(k_.sub(q.x, p.x)));
    }
    auto x3 = k_.sub(k_.sub(k_.mul(lambda, lambda), p.x), q.x);
    auto y3 = k_.sub(k_.mul(lambda, k_.sub(p.x, x3)), p.y);
    return {x3, y3, false};
  }

  Point<F> mul(Point<F> p, u64 n) const {
    Point<F> r;
    while (n) {
      if (n & 1) r = add(r, p);
      n >>= 1;
      if (n) p = add(p, p);
    }
    return r;
  }

 private:
  const F& k_;
  typename F::Elt a_;
};

// Some n in [lo, hi] with [n]P = O, by baby-step giant-step with the x-coordinate trick.
template <class F>
std::optional<u64> bsgs_multiple(const F& k, const ShortCurve<F>& e, const Point<F>& p, u64 lo, u64 hi) {
  const u64 m = isqrt(hi - lo) + 1;
  std::vector<std::pair<u128, u64>> baby;
  baby.reserve(m);
  Point<F> jp;
  for (u64 j = 0; j < m; ++j) {
    if (!jp.inf) baby.emplace_back(k.key(jp.x), j);
    jp = e.add(jp, p);
  }
  std::sort(baby.begin(), baby.end());
  const Point<F> stride = e.mul(p, m);
  Point<F> g = e.mul(p, lo);
  for (u64 base = lo; base <= hi + m; base += m) {
    if (g.inf) {
      if (base > 0) return base;
    } else {
      auto it = std::lower_bound(baby.begin(), baby.end(), std::make_pair(k.key(g.x), u64{0}));
      for (; it != baby.end() && it->first == k.key(g.x); ++it) {
        Point<F> b = e.mul(p, it->second);
        // g = +-[j]P, so [base -+ j]P = O
        u64 n = k.eq(b.y, g.y) ? base - it->second : base + it->second;
        if (n > 0) return n;
      }
    }
    g = e.add(g, stride);
  }
  return std::nullopt;
}

template <class F>
u64 point_order(const ShortCurve<F>& e, const Point<F>& p, u64 multiple) {
  u64 ord = multiple;
  for (auto [ell, exp] : factor_u64(multiple)) {
    for (int i = 0; i < exp; ++i) {
      if (!e.mul(p, ord / ell).inf) break;
      ord /= ell;
    }
  }
  return ord;
}

u64 lcm_capped(u64 a, u64 b) {
  u64 g = gcd_u64(a, b);
  u128 l = static_cast<u128>(a / g) * b;
  return l > (u128{1} << 63) ? (u64{1} << 63) : static_cast<u64>(l);
}

}  // namespace

template <class F>
void validate_model(const Genus1Model<F>& m) {
  if (m.g.deg != 3 && m.g.deg != 4) fail(ErrorCode::DegreeError, "genus one model needs degree 3 or 4");
  if (m.field.is_zero(disc(m.field, m.g))) fail(ErrorCode::NotSquarefree, "genus one model is singular");
}

template <class F>
u64 count_points_naive(const Genus1Model<F>& m, u64 limit) {
  require_countable(m, limit);
  const SquareTable table(m.field.characteristic());
  const i64 q = static_cast<i64>(m.field.size());
  i64 total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (q > 4096)
  for (i64 i = 0; i < q; ++i)
    total += 1 + table.chi(m.field, eval(m.field, m.g, m.field.element(static_cast<u64>(i))));
  return static_cast<u64>(total + points_at_infinity(m));
}

template <class F>
u64 count_points_naive_serial(const Genus1Model<F>& m, u64 limit) {
  require_countable(m, limit);
  const SquareTable table(m.field.characteristic());
  const u64 q = m.field.size();
  i64 total = 0;
  for (u64 i = 0; i < q; ++i) total += 1 + table.chi(m.field, eval(m.field, m.g, m.field.element(i)));
  return static_cast<u64>(total + points_at_infinity(m));
}

template <class F>
Genus1Model<F> quartic_to_cubic(const Genus1Model<F>& m) {
  if (m.g.deg != 4) fail(ErrorCode::DegreeError, "quartic_to_cubic needs a quartic");
  if (!m.field.is_zero(m.g[0])) fail(ErrorCode::InvalidArgument, "quartic_to_cubic needs g(0) = 0");
  return {m.field, reverse(m.field, m.g, 4)};
}

template <class F>
Genus1Model<F> quartic_jacobian(const Genus1Model<F>& m) {
  if (m.g.deg != 4) fail(ErrorCode::DegreeError, "quartic_jacobian needs a quartic");
  if (m.field.characteristic() == 3) fail(ErrorCode::Unsupported, "quartic_jacobian is unavailable in characteristic 3");
  const F& k = m.field;
  const auto &a = m.g[4], &b = m.g[3], &c = m.g[2], &d = m.g[1], &e = m.g[0];
  const auto n = [&](i64 v) { return k.from_int(v); };
  auto inv_i = k.add(k.sub(k.mul(n(12), k.mul(a, e)), k.mul(n(3), k.mul(b, d))), k.mul(c, c));
  auto inv_j = k.mul(n(72), k.mul(a, k.mul(c, e)));
  inv_j = k.add(inv_j, k.mul(n(9), k.mul(b, k.mul(c, d))));
  inv_j = k.sub(inv_j, k.mul(n(27), k.mul(a, k.mul(d, d))));
  inv_j = k.sub(inv_j, k.mul(n(27), k.mul(k.mul(b, b), e)));
  inv_j = k.sub(inv_j, k.mul(n(2), k.mul(c, k.mul(c, c))));
  PolyOf<F> h;
  h[3] = k.one();
  h[1] = k.neg(k.mul(n(27), inv_i));
  h[0] = k.neg(k.mul(n(27), inv_j));
  normalize(k, h);
  return {k, h};
}

template <class F>
u64 group_order_bsgs(const Genus1Model<F>& m, Rng& rng, int max_points) {
  validate_model(m);
  if (m.g.deg != 3) fail(ErrorCode::DegreeError, "group_order_bsgs needs a cubic model");
  const F& k = m.field;
  if (k.characteristic() <= 3) fail(ErrorCode::Unsupported, "group_order_bsgs needs characteristic > 3");
  const u64 q = k.size();
  if (q >= kMaxPrime) fail(ErrorCode::FieldTooLarge, "field too large for group order search");

  // a x^3 + b x^2 + c x + d  ->  X^3 + b X^2 + a c X + a^2 d  ->  t^3 + A t + B
  const auto a = m.g[3];
  PolyOf<F> w;
  w[3] = k.one();
  w[2] = m.g[2];
  w[1] = k.mul(a, m.g[1]);
  w[0] = k.mul(k.mul(a, a), m.g[0]);
  w.deg = 3;
  w = taylor_shift(k, w, k.neg(k.divexact(w[2], k.from_int(3))));
  const auto ca = w[1];

  const u64 width = isqrt(4 * q);
  const u64 lo = q + 1 - width, hi = q + 1 + width;
  u64 me = 1, mt = 1;
  for (int tries = 0; tries < max_points; ++tries) {
    const auto x = k.random(rng);
    const auto t = eval(k, w, x);
    if (k.is_zero(t)) continue;
    const bool on_twist = k.chi(t) == -1;
    const auto t2 = k.mul(t, t);
    const ShortCurve<F> e(k, k.mul(ca, t2));
    const Point<F> pt{k.mul(x, t), t2, false};
    auto mult = bsgs_multiple(k, e, pt, lo, hi);
    if (!mult) continue;
    const u64 ord = point_order(e, pt, *mult);
    (on_twist ? mt : me) = lcm_capped(on_twist ? mt : me, ord);

    const u64 big = std::max(me, mt);
    if (big * 64 <= hi - lo) continue;
    std::optional<u64> found;
    int count = 0;
    const bool step_e = me >= mt;
    const u64 first = (lo + big - 1) / big * big;
    for (u64 s = first; s <= hi && count < 2; s += big) {
      const u64 n = step_e ? s : 2 * q + 2 - s;
      if (n % me == 0 && (2 * q + 2 - n) % mt == 0) {
        found = n;
        ++count;
      }
    }
    if (count == 1) return *found;
  }
  fail(ErrorCode::Ambiguous, "group order not determined");
}

template <class F>
LPoly1 lpoly1(const Genus1Model<F>& m, Rng& rng, const Genus1Options& opts) {
  validate_model(m);
  const u64 q = m.field.size();
  u64 n = 0;
  if (!opts.force_bsgs && q <= opts.naive_threshold) {
    n = count_points_naive(m, opts.naive_threshold);
  } else {
    Genus1Model<F> cubic = m;
    if (m.g.deg == 4) cubic = m.field.is_zero(m.g[0]) ? quartic_to_cubic(m) : quartic_jacobian(m);
    try {
      n = group_order_bsgs(cubic, rng, opts.max_points);
    } catch (const Error& err) {
      if ((err.code() != ErrorCode::Ambiguous && err.code() != ErrorCode::Unsupported) || q > kNaiveLimit) throw;
      n = count_points_naive(m, kNaiveLimit);
    }
  }
  const i128 a = static_cast<i128>(q) + 1 - static_cast<i128>(n);
  if (a * a > 4 * static_cast<i128>(q)) fail(ErrorCode::HasseViolation, "trace outside the Hasse interval");
  return {static_cast<i64>(a), q};
}

#define G2EULER_INSTANTIATE(F)                                                             \
  template void validate_model<F>(const Genus1Model<F>&);                                  \
  template u64 count_points_naive<F>(const Genus1Model<F>&, u64);                          \
  template u64 count_points_naive_serial<F>(const Genus1Model<F>&, u64);                   \
  template Genus1Model<F> quartic_to_cubic<F>(const Genus1Model<F>&);                      \
  template Genus1Model<F> quartic_jacobian<F>(const Genus1Model<F>&);                      \
  template u64 group_order_bsgs<F>(const Genus1Model<F>&, Rng&, int);                      \
  template LPoly1 lpoly1<F>(const Genus1Model<F>&, Rng&, const Genus1Options&);

G2EULER_INSTANTIATE(PrimeField)
G2EULER_INSTANTIATE(QuadField)

#undef G2EULER_INSTANTIATE

}  // namespace g2euler
