#include "g2euler/cluster.hpp"

#include <algorithm>
#include <limits>

namespace g2euler {

std::string_view type_name(ClusterType t) noexcept {
  switch (t) {
    case ClusterType::T1: return "1";
    case ClusterType::T2a: return "2a";
    case ClusterType::T2b: return "2b";
    case ClusterType::T4: return "4";
  }
  return "?";
}

namespace {

i64 ceil_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

mpz_class ppow(u64 p, i64 e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

PNormalized p_normalize(const IntPoly& input, u64 p) {
  require_odd_prime(p);
  if (input.deg != 5 && input.deg != 6) fail(ErrorCode::DegreeError, "curve polynomial must have degree 5 or 6");
  IntegerRing zz(p);
  if (sgn(disc(zz, input)) == 0) fail(ErrorCode::NotSquarefree, "curve polynomial is not squarefree");

  IntPoly f = input;
  if (f.deg == 5) {
    int a = 0;
    while (a <= 6 && sgn(eval(zz, f, mpz_class(a))) == 0) ++a;
    if (a > 6) fail(ErrorCode::NotSquarefree, "quintic vanishes at 0..6");
    f = reverse(zz, taylor_shift(zz, f, mpz_class(a)), 6);
  }

  int v = valuation(f[6], p);
  int vmin = v;
  std::array<int, 7> vals{};
  for (int i = 0; i <= 6; ++i) {
    vals[i] = valuation(f[i], p);
    vmin = std::min(vmin, vals[i]);
  }
  if (v > 1 || v != vmin) {
    i64 e = std::numeric_limits<i64>::min();
    for (int i = 0; i < 6; ++i)
      if (sgn(f[i]) != 0) e = std::max(e, ceil_div(v - vals[i], 6 - i));
    const i64 w = 2 * (v / 2);
    for (int i = 0; i <= 6; ++i) {
      if (sgn(f[i]) == 0) continue;
      const i64 t = (6 - i) * e - w;
      if (t > 0) f[i] *= ppow(p, t);
      else if (t < 0) f[i] = zz.divide_checked(f[i], ppow(p, -t));
    }
    normalize(zz, f);
    v = valuation(f[6], p);
  }

  IntPoly h = f;
  if (v > 0) {
    const mpz_class d = ppow(p, v);
    for (int i = 0; i <= h.deg; ++i) h[i] = zz.divide_checked(h[i], d);
  }

  const PrimeField& F = zz.residue_field();
  const int bound = valuation(disc(zz, h), p) + 1;
  int steps = 0;
  for (;;) {
    FpPoly hb = reduce(zz, h);
    FpPoly u = gcd_k(F, hb, 6);
    if (u.deg == 0) break;
    if (++steps > bound) fail(ErrorCode::DepthOverflow, "outer recentering did not terminate");
    h = shift_scale(zz, h, 1, zz.lift(linear_root(F, u)), 6);
  }

  PNormalized out;
  out.p = p;
  out.v = v;
  out.outer_steps = steps;
  out.f = h;
  if (v > 0) out.f = scale(zz, h, ppow(p, v));
  return out;
}

IntPoly unit_part(const PNormalized& nf) {
  if (nf.v == 0) return nf.f;
  IntegerRing zz(nf.p);
  IntPoly r = nf.f;
  const mpz_class d = ppow(nf.p, nf.v);
  for (int i = 0; i <= r.deg; ++i) r[i] = zz.divide_checked(r[i], d);
  return r;
}

ClusterType which_type(const PNormalized& nf) {
  IntegerRing zz(nf.p);
  const PrimeField& F = zz.residue_field();
  const FpPoly fb = reduce(zz, unit_part(nf));
  if (fb.deg != 6) fail(ErrorCode::InvalidArgument, "which_type needs a p-normalized model");
  if (squarefree_part(F, fb).deg == fb.deg) fail(ErrorCode::GoodReduction, "reduction is squarefree");

  const FpPoly g = gcd_k(F, fb, 3);
  switch (g.deg) {
    case 1:
      if (gcd_k(F, fb, 2).deg != 2) break;
      return ClusterType::T1;
    case 2: {
      const u64 d = F.sub(F.mul(g[1], g[1]), F.mul(4, g[0]));
      if (d == 0) break;
      return F.chi(d) == 1 ? ClusterType::T2a : ClusterType::T2b;
    }
    case 3:
      return ClusterType::T4;
    default:
      break;
  }
  fail(ErrorCode::NotAlmostGood, "reduction pattern is not almost good");
}

}  // namespace g2euler
