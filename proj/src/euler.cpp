#include "g2euler/euler.hpp"

#include <sstream>

namespace g2euler {

namespace {

mpz_class to_mpz(i128 v) {
  const bool negative = v < 0;
  u128 m = negative ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class r = static_cast<unsigned long>(static_cast<u64>(m >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<u64>(m));
  return negative ? mpz_class(-r) : r;
}

int loop_bound(const PNormalized& nf, const EulerOptions& opts) {
  if (opts.max_iters > 0) return opts.max_iters;
  return valuation(disc(IntegerRing(nf.p), nf.f), nf.p) + 1;
}

// Repeated f <- f(p x + r) / p^3 until the reduction is a squarefree cubic.
template <class R>
std::pair<Poly<typename R::Residue::Elt>, int> recenter(const R& ring, PolyOf<R> f, typename R::Elt r, int bound,
                                                         bool even_checks_only = false) {
  const auto& k = ring.residue_field();
  for (int it = 1;; ++it) {
    if (it > bound) fail(ErrorCode::NotAlmostGood, "recentering loop exceeded its bound");
    try {
      f = shift_scale(ring, f, 1, r, 3);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InexactDivision) fail(ErrorCode::NotAlmostGood, "inexact division while recentering");
      throw;
    }
    auto g = reduce(ring, f);
    if (g.deg != 3) fail(ErrorCode::NotAlmostGood, "reduction is not a cubic while recentering");
    if ((!even_checks_only || it % 2 == 0) && !k.is_zero(disc(k, g))) return {g, it};
    auto t = gcd_k(k, g, 3);
    if (t.deg != 1) fail(ErrorCode::NotAlmostGood, "no triple root while recentering");
    r = ring.lift(linear_root(k, t));
  }
}

}  // namespace

std::array<mpz_class, 5> coefficients(const LPoly2& l) {
  const mpz_class p = static_cast<unsigned long>(l.p);
  const mpz_class a1 = static_cast<long>(l.a1);
  return {mpz_class(1), a1, to_mpz(l.a2), mpz_class(p * a1), mpz_class(p * p)};
}

std::string to_string(const LPoly2& l) {
  std::ostringstream os;
  os << '[';
  const auto c = coefficients(l);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
  os << ']';
  return os.str();
}

LPoly2 product(const LPoly1& e1, const LPoly1& e2) {
  if (e1.q != e2.q) fail(ErrorCode::InvalidArgument, "product: factors over different fields");
  return {-(e1.a + e2.a), 2 * static_cast<i128>(e1.q) + static_cast<i128>(e1.a) * e2.a, e1.q};
}

LPoly2 from_quadratic(const LPoly1& e, u64 p) {
  if (static_cast<u128>(p) * p != e.q) fail(ErrorCode::InvalidArgument, "from_quadratic: field is not F_{p^2}");
  return {0, -static_cast<i128>(e.a), p};
}

bool validate_lpoly2(const LPoly2& l) {
  const mpz_class p = static_cast<unsigned long>(l.p);
  const mpz_class a1 = static_cast<long>(l.a1);
  const mpz_class a2 = to_mpz(l.a2);
  const mpz_class a1sq = a1 * a1;
  if (a1sq > 16 * p) return false;
  if (abs(a2) > 6 * p) return false;
  // reciprocal-root traces t1, t2 solve t^2 - a1 t + (a2 - 2p) = 0 and must lie in [-2 sqrt p, 2 sqrt p]
  if (a1sq - 4 * (a2 - 2 * p) < 0) return false;
  const mpz_class s = 2 * p + a2;
  if (s < 0) return false;
  return s * s >= 4 * a1sq * p;
}

LPoly2 euler_type1(const PNormalized& nf, Rng& rng, const EulerOptions& opts, EulerDetail* detail) {
  // v = 1 only arises for the twist by p; the loop sees p^-v f either way
  IntegerRing zz(nf.p);
  const PrimeField& F = zz.residue_field();
  const IntPoly h = unit_part(nf);
  const FpPoly fb = reduce(zz, h);
  const FpPoly t = gcd_k(F, fb, 3);
  if (t.deg != 1) fail(ErrorCode::NotAlmostGood, "type 1 needs a single triple root");
  const u64 r = linear_root(F, t);

  const FpPoly shifted = taylor_shift(F, fb, r);
  if (shifted[0] != 0 || shifted[1] != 0) fail(ErrorCode::NotAlmostGood, "type 1 quartic is not integral");
  FpPoly g1;
  for (int i = 2; i <= shifted.deg; ++i) g1[i - 2] = shifted[i];
  normalize(F, g1);
  const Genus1ModelFp e1{F, g1};

  auto [g2, iters] = recenter(zz, h, zz.lift(r), loop_bound(nf, opts), opts.even_checks_only);
  const Genus1ModelFp e2{F, g2};

  if (detail) {
    detail->type = ClusterType::T1;
    detail->v = nf.v;
    detail->outer_steps = nf.outer_steps;
    detail->loop1 = iters;
    detail->loop2 = 0;
    detail->e1 = to_string(g1);
    detail->e2 = to_string(g2);
  }
  return product(lpoly1(e1, rng, opts.genus1), lpoly1(e2, rng, opts.genus1));
}

LPoly2 euler_type2a(const PNormalized& nf, u64 nonsquare, Rng& rng, const EulerOptions& opts, EulerDetail* detail) {
  IntegerRing zz(nf.p);
  const PrimeField& F = zz.residue_field();
  const IntPoly ft = unit_part(nf);
  const FpPoly fb = reduce(zz, ft);
  const FpPoly u = gcd_k(F, fb, 3);
  if (u.deg != 2) fail(ErrorCode::NotAlmostGood, "type 2a needs two triple roots");
  const u64 d = F.sub(F.mul(u[1], u[1]), F.mul(4, u[0]));
  const u64 sq = sqrt_mod_p(d, nonsquare, nf.p);
  const u64 half = F.inv(2);
  u64 r1 = F.mul(F.add(F.neg(u[1]), sq), half);
  u64 r2 = F.mul(F.sub(F.neg(u[1]), sq), half);
  if (r1 == r2) fail(ErrorCode::NotAlmostGood, "type 2a roots coincide");
  if (r2 < r1) std::swap(r1, r2);

  const int bound = loop_bound(nf, opts);
  auto [g1, n1] = recenter(zz, ft, zz.lift(r1), bound);
  auto [g2, n2] = recenter(zz, ft, zz.lift(r2), bound);
  if (detail) {
    detail->type = ClusterType::T2a;
    detail->v = nf.v;
    detail->outer_steps = nf.outer_steps;
    detail->loop1 = n1;
    detail->loop2 = n2;
    detail->e1 = to_string(g1);
    detail->e2 = to_string(g2);
  }
  return product(lpoly1(Genus1ModelFp{F, g1}, rng, opts.genus1), lpoly1(Genus1ModelFp{F, g2}, rng, opts.genus1));
}

LPoly2 euler_type2b(const PNormalized& nf, Rng& rng, const EulerOptions& opts, EulerDetail* detail) {
  IntegerRing zz(nf.p);
  const PrimeField& F = zz.residue_field();
  const IntPoly ft = unit_part(nf);
  const FpPoly fb = reduce(zz, ft);
  const FpPoly u = gcd_k(F, fb, 3);
  if (u.deg != 2 || F.chi(F.sub(F.mul(u[1], u[1]), F.mul(4, u[0]))) != -1)
    fail(ErrorCode::NotAlmostGood, "type 2b needs the cube of an irreducible quadratic");
  const QuadField kappa(nf.p, u[1], u[0]);
  const QuadOrder order = QuadOrder::from_residue(kappa);
  const OrderElt start = opts.conjugate_start ? order.lift(kappa.frobenius(kappa.gen())) : order.gen();

  auto [g, iters] = recenter(order, embed(order, ft), start, loop_bound(nf, opts));
  if (detail) {
    detail->type = ClusterType::T2b;
    detail->v = nf.v;
    detail->outer_steps = nf.outer_steps;
    detail->loop1 = iters;
    detail->loop2 = 0;
    detail->e1 = to_string(g);
    detail->e2.clear();
  }
  return from_quadratic(lpoly1(Genus1ModelFp2{kappa, g}, rng, opts.genus1), nf.p);
}

LPoly2 euler_type4(const PNormalized& nf, Rng& rng, const EulerOptions& opts, EulerDetail* detail) {
  IntegerRing zz(nf.p);
  const PrimeField& F = zz.residue_field();
  IntPoly ft = unit_part(nf);
  FpPoly fb = reduce(zz, ft);
  FpPoly t = gcd_k(F, fb, 5);
  if (t.deg != 1) fail(ErrorCode::NotAlmostGood, "type 4 needs a quintuple root");
  mpz_class r = zz.lift(linear_root(F, t));

  const int bound = loop_bound(nf, opts);
  int outer = 0;
  u64 s = 0;
  FpPoly g1;
  for (;;) {
    if (++outer > bound) fail(ErrorCode::NotAlmostGood, "outer loop exceeded its bound");
    try {
      ft = shift_scale(zz, ft, 1, r, 5);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InexactDivision) fail(ErrorCode::NotAlmostGood, "inexact division in outer loop");
      throw;
    }
    fb = reduce(zz, ft);
    if (fb.deg != 5) fail(ErrorCode::NotAlmostGood, "reduction is not a quintic in outer loop");
    const FpPoly g3 = gcd_k(F, fb, 3);
    if (g3.deg == 1) {
      s = linear_root(F, g3);
      FpPoly sq;
      sq[0] = F.mul(s, s);
      sq[1] = F.neg(F.add(s, s));
      sq[2] = 1;
      sq.deg = 2;
      g1 = div_exact(F, fb, sq);
      break;
    }
    if (g3.deg != 3) fail(ErrorCode::NotAlmostGood, "unexpected multiplicity pattern in outer loop");
    t = gcd_k(F, fb, 5);
    if (t.deg != 1) fail(ErrorCode::NotAlmostGood, "no quintuple root in outer loop");
    r = zz.lift(linear_root(F, t));
  }

  auto [g2, inner] = recenter(zz, ft, zz.lift(s), bound);
  if (detail) {
    detail->type = ClusterType::T4;
    detail->v = nf.v;
    detail->outer_steps = nf.outer_steps;
    detail->loop1 = outer;
    detail->loop2 = inner;
    detail->e1 = to_string(g1);
    detail->e2 = to_string(g2);
  }
  return product(lpoly1(Genus1ModelFp{F, g1}, rng, opts.genus1), lpoly1(Genus1ModelFp{F, g2}, rng, opts.genus1));
}

LPoly2 euler_factor(const EulerInput& input, Rng& rng, const EulerOptions& opts, EulerDetail* detail) {
  require_odd_prime(input.p);
  const IntPoly f = input.h ? complete_square(input.f, *input.h) : input.f;
  const PNormalized nf = p_normalize(f, input.p);
  EulerOptions o = opts;
  if (input.max_iters > 0) o.max_iters = input.max_iters;

  LPoly2 l;
  switch (which_type(nf)) {
    case ClusterType::T1:
      l = euler_type1(nf, rng, o, detail);
      break;
    case ClusterType::T2a: {
      const u64 s = input.nonsquare ? *input.nonsquare % input.p : find_nonsquare(input.p, rng);
      l = euler_type2a(nf, s, rng, o, detail);
      break;
    }
    case ClusterType::T2b:
      l = euler_type2b(nf, rng, o, detail);
      break;
    case ClusterType::T4:
      l = euler_type4(nf, rng, o, detail);
      break;
  }
  if (!validate_lpoly2(l)) fail(ErrorCode::HasseViolation, "Euler factor fails the Weil bounds");
  return l;
}

}  // namespace g2euler
