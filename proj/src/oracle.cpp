#include "g2euler/oracle.hpp"

#include <algorithm>

namespace g2euler {

namespace {

mpz_class ppow(u64 p, int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

void check_prime(u64 p, const OracleOptions& opts) {
  require_odd_prime(p);
  if (opts.compute_expected && p > kOracleMaxPrime)
    fail(ErrorCode::FieldTooLarge, "oracle expected values need p <= 2^13");
}

[[noreturn]] void retries_exhausted() {
  fail(ErrorCode::InvalidArgument, "oracle constraint retries exhausted");
}

template <class F>
PolyOf<F> random_monic(const F& k, int deg, Rng& rng) {
  PolyOf<F> g;
  for (int i = 0; i < deg; ++i) g[i] = k.random(rng);
  g[deg] = k.one();
  g.deg = deg;
  return g;
}

template <class F>
PolyOf<F> random_squarefree_cubic(const F& k, Rng& rng) {
  for (int i = 0; i < kOracleRetries; ++i) {
    auto g = random_monic(k, 3, rng);
    if (!k.is_zero(disc(k, g))) return g;
  }
  retries_exhausted();
}

u64 random_residue(u64 p, Rng& rng, u64 lo = 0) { return std::uniform_int_distribution<u64>(lo, p - 1)(rng); }

/// p^{3n} h((x - r)/p^n) for monic cubic h.
template <class R>
PolyOf<R> scaled_cluster(const R& ring, const PolyOf<R>& h, int n, const typename R::Elt& r) {
  PolyOf<R> k;
  for (int i = 0; i <= 3; ++i) k[i] = ring.scale(h[i], ppow(ring.prime(), n * (3 - i)));
  normalize(ring, k);
  return taylor_shift(ring, k, ring.neg(r));
}

LPoly1 brute_lpoly1(const Genus1ModelFp& m) {
  const u64 q = m.field.size();
  return {static_cast<i64>(q + 1) - static_cast<i64>(brute_force_count(m)), q};
}

LPoly1 brute_lpoly1(const Genus1ModelFp2& m) {
  const u64 q = m.field.size();
  return {static_cast<i64>(q + 1) - static_cast<i64>(brute_force_count(m)), q};
}

FpPoly linear(const PrimeField& F, u64 root) {
  FpPoly g;
  g[0] = F.neg(root);
  g[1] = 1;
  g.deg = 1;
  return g;
}

mpz_class random_signed(int bits, Rng& rng) {
  mpz_class r = 0;
  for (int done = 0; done < bits; done += 64) {
    r <<= 64;
    r += static_cast<unsigned long>(rng());
  }
  mpz_class bound = 1;
  bound <<= bits;
  r %= bound;
  if (rng() & 1) r = -r;
  return r;
}

}  // namespace

u64 brute_force_count(const Genus1ModelFp& m) {
  validate_model(m);
  const PrimeField& k = m.field;
  const u64 p = k.modulus();
  if (p > (u64{1} << 26)) fail(ErrorCode::FieldTooLarge, "brute_force_count: field too large");
  std::vector<unsigned char> roots(p, 0);
  for (u64 y = 0; y < p; ++y) ++roots[k.mul(y, y)];
  u64 total = 0;
  for (u64 x = 0; x < p; ++x) total += roots[eval(k, m.g, x)];
  total += m.g.deg == 3 ? 1 : roots[m.g.lead()];
  return total;
}

u64 brute_force_count(const Genus1ModelFp2& m) {
  validate_model(m);
  const QuadField& k = m.field;
  const u64 p = k.characteristic();
  const u64 q = k.size();
  if (q > (u64{1} << 26)) fail(ErrorCode::FieldTooLarge, "brute_force_count: field too large");
  const auto index = [p](const Fp2Elt& a) { return a.c0 + p * a.c1; };
  std::vector<unsigned char> roots(q, 0);
  for (u64 i = 0; i < q; ++i) {
    const auto y = k.element(i);
    ++roots[index(k.mul(y, y))];
  }
  u64 total = 0;
  for (u64 i = 0; i < q; ++i) total += roots[index(eval(k, m.g, k.element(i)))];
  total += m.g.deg == 3 ? 1 : roots[index(m.g.lead())];
  return total;
}

OracleInstance gen_type1(u64 p, int n, Rng& rng, const OracleOptions& opts) {
  check_prime(p, opts);
  if (n < 2 || n % 2 != 0) fail(ErrorCode::InvalidArgument, "type 1 depth must be even and >= 2");
  const PrimeField F(p);
  const IntegerRing zz(p);
  for (int attempt = 0; attempt < kOracleRetries; ++attempt) {
    const FpPoly h0 = random_squarefree_cubic(F, rng);
    const FpPoly h1 = random_squarefree_cubic(F, rng);
    const u64 s1 = random_residue(p, rng);
    const u64 c = eval(F, h0, s1);
    if (c == 0) continue;
    OracleInstance inst;
    inst.p = p;
    inst.type = ClusterType::T1;
    inst.n = n;
    inst.f = mul(zz, lift(zz, h0), scaled_cluster(zz, lift(zz, h1), n, zz.lift(s1)));
    if (opts.compute_expected) {
      const LPoly1 e1 = brute_lpoly1(Genus1ModelFp{F, mul(F, h0, linear(F, s1))});
      const LPoly1 e2 = brute_lpoly1(Genus1ModelFp{F, scale(F, h1, c)});
      inst.expected = product(e1, e2);
      inst.has_expected = true;
    }
    return inst;
  }
  retries_exhausted();
}

OracleInstance gen_type2a(u64 p, int n, int m, int v, Rng& rng, const OracleOptions& opts) {
  check_prime(p, opts);
  if (n < 1 || m < 1 || (v != 0 && v != 1) || (n - m) % 2 != 0 || (n - v) % 2 != 0)
    fail(ErrorCode::InvalidArgument, "type 2a needs depths n = m = v mod 2");
  const PrimeField F(p);
  const IntegerRing zz(p);
  const u64 s1 = random_residue(p, rng);
  u64 s2 = s1;
  for (int i = 0; i < kOracleRetries && s2 == s1; ++i) s2 = random_residue(p, rng);
  if (s2 == s1) retries_exhausted();
  const FpPoly h1 = random_squarefree_cubic(F, rng);
  const FpPoly h2 = random_squarefree_cubic(F, rng);

  OracleInstance inst;
  inst.p = p;
  inst.type = ClusterType::T2a;
  inst.n = n;
  inst.m = m;
  inst.v = v;
  inst.f = mul(zz, scaled_cluster(zz, lift(zz, h1), n, zz.lift(s1)), scaled_cluster(zz, lift(zz, h2), m, zz.lift(s2)));
  if (v) inst.f = scale(zz, inst.f, mpz_class(static_cast<unsigned long>(p)));
  if (opts.compute_expected) {
    const u64 d12 = F.sub(s1, s2);
    const u64 d21 = F.sub(s2, s1);
    const LPoly1 e1 = brute_lpoly1(Genus1ModelFp{F, scale(F, h1, F.pow(d12, 3))});
    const LPoly1 e2 = brute_lpoly1(Genus1ModelFp{F, scale(F, h2, F.pow(d21, 3))});
    inst.expected = product(e1, e2);
    inst.has_expected = true;
  }
  return inst;
}

OracleInstance gen_type2b(u64 p, int n, Rng& rng, const OracleOptions& opts) {
  check_prime(p, opts);
  if (n < 1) fail(ErrorCode::InvalidArgument, "type 2b depth must be >= 1");
  const PrimeField F(p);
  u64 u1 = 0, u0 = 0;
  bool found = false;
  for (int i = 0; i < kOracleRetries && !found; ++i) {
    u1 = random_residue(p, rng);
    u0 = random_residue(p, rng);
    found = F.chi(F.sub(F.mul(u1, u1), F.mul(4, u0))) == -1;
  }
  if (!found) retries_exhausted();
  const QuadField kappa(p, u1, u0);
  const QuadOrder order = QuadOrder::from_residue(kappa);
  const Fp2Poly hbar = random_squarefree_cubic(kappa, rng);

  const OrderPoly g = scaled_cluster(order, lift(order, hbar), n, order.gen());
  OrderPoly gc;
  for (int i = 0; i <= g.deg; ++i) gc[i] = order.conj(g[i]);
  gc.deg = g.deg;
  const OrderPoly prod = mul(order, g, gc);

  OracleInstance inst;
  inst.p = p;
  inst.type = ClusterType::T2b;
  inst.n = n;
  inst.v = n % 2;
  std::vector<mpz_class> coeffs;
  for (int i = 0; i <= prod.deg; ++i) {
    if (sgn(prod[i].a1) != 0) fail(ErrorCode::InvalidArgument, "type 2b product is not integral");
    coeffs.push_back(prod[i].a0);
  }
  inst.f = int_poly(coeffs);
  if (inst.v) inst.f = scale(IntegerRing(p), inst.f, mpz_class(static_cast<unsigned long>(p)));
  if (opts.compute_expected) {
    const Fp2Elt zb = kappa.gen();
    const Fp2Elt d = kappa.sub(zb, kappa.frobenius(zb));
    const LPoly1 e = brute_lpoly1(Genus1ModelFp2{kappa, scale(kappa, hbar, kappa.pow(d, 3))});
    inst.expected = from_quadratic(e, p);
    inst.has_expected = true;
  }
  return inst;
}

OracleInstance gen_type4(u64 p, int n, int m, Rng& rng, const OracleOptions& opts) {
  check_prime(p, opts);
  if (n < 1 || m <= n || (m - n) % 2 != 0) fail(ErrorCode::InvalidArgument, "type 4 needs m > n >= 1, m = n mod 2");
  const PrimeField F(p);
  const IntegerRing zz(p);
  const u64 s0 = random_residue(p, rng);
  u64 s1 = s0;
  for (int i = 0; i < kOracleRetries && s1 == s0; ++i) s1 = random_residue(p, rng);
  if (s1 == s0) retries_exhausted();
  const u64 a1 = random_residue(p, rng, 1);
  u64 a2 = a1;
  for (int i = 0; i < kOracleRetries && a2 == a1; ++i) a2 = random_residue(p, rng, 1);
  if (a2 == a1) retries_exhausted();
  const FpPoly h2 = random_squarefree_cubic(F, rng);

  const mpz_class pn = ppow(p, n);
  const mpz_class S0 = zz.lift(s0), S1 = zz.lift(s1);
  const IntPoly l0 = int_poly({mpz_class(-S0), mpz_class(1)});
  const IntPoly l1 = int_poly({mpz_class(-S1 - pn * zz.lift(a1)), mpz_class(1)});
  const IntPoly l2 = int_poly({mpz_class(-S1 - pn * zz.lift(a2)), mpz_class(1)});

  OracleInstance inst;
  inst.p = p;
  inst.type = ClusterType::T4;
  inst.n = n;
  inst.m = m;
  inst.v = n % 2;
  inst.f = mul(zz, mul(zz, mul(zz, l0, l1), l2), scaled_cluster(zz, lift(zz, h2), m, S1));
  if (inst.v) inst.f = scale(zz, inst.f, mpz_class(static_cast<unsigned long>(p)));
  if (opts.compute_expected) {
    const u64 d = F.sub(s1, s0);
    FpPoly c1 = mul(F, mul(F, monomial_x(F), linear(F, a1)), linear(F, a2));
    const LPoly1 e1 = brute_lpoly1(Genus1ModelFp{F, scale(F, c1, d)});
    const LPoly1 e2 = brute_lpoly1(Genus1ModelFp{F, scale(F, h2, F.mul(d, F.mul(a1, a2)))});
    inst.expected = product(e1, e2);
    inst.has_expected = true;
  }
  return inst;
}

OracleInstance random_instance(ClusterType type, u64 p, int max_depth, u64 seed, const OracleOptions& opts) {
  Rng rng(seed);
  const auto pick = [&](int lo, int hi, int parity) {
    std::vector<int> options;
    for (int d = lo; d <= hi; ++d)
      if (parity < 0 || d % 2 == parity) options.push_back(d);
    if (options.empty()) fail(ErrorCode::InvalidArgument, "no admissible depth");
    return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
  };
  OracleInstance inst;
  switch (type) {
    case ClusterType::T1:
      inst = gen_type1(p, pick(2, std::max(max_depth, 2), 0), rng, opts);
      break;
    case ClusterType::T2a: {
      const int v = static_cast<int>(rng() & 1);
      const int hi = std::max(max_depth, 2);
      const int n = pick(1, hi, v), m = pick(1, hi, v);
      inst = gen_type2a(p, n, m, v, rng, opts);
      break;
    }
    case ClusterType::T2b:
      inst = gen_type2b(p, pick(1, std::max(max_depth, 1), -1), rng, opts);
      break;
    case ClusterType::T4: {
      const int hi = std::max(max_depth, 3);
      const int n = pick(1, hi - 2, -1);
      const int m = pick(n + 2, hi, n % 2);
      inst = gen_type4(p, n, m, rng, opts);
      break;
    }
  }
  inst.seed = seed;
  return inst;
}

int perturbation_exponent(const OracleInstance& inst) {
  switch (inst.type) {
    case ClusterType::T1: return 3 * inst.n + 1;
    case ClusterType::T2a: return inst.v + 3 * std::max(inst.n, inst.m) + 1;
    case ClusterType::T2b: return inst.v + 3 * inst.n + 1;
    case ClusterType::T4: return inst.v + 3 * inst.m + 2 * inst.n + 1;
  }
  return 0;
}

OracleInstance perturb(const OracleInstance& inst, int max_bits, Rng& rng) {
  const IntegerRing zz(inst.p);
  const mpz_class pk = ppow(inst.p, perturbation_exponent(inst));
  const int bits = std::max(8, max_bits - static_cast<int>(mpz_sizeinbase(pk.get_mpz_t(), 2)));
  for (int attempt = 0; attempt < kOracleRetries; ++attempt) {
    OracleInstance out = inst;
    for (int i = 0; i <= kMaxDegree; ++i) out.f[i] += pk * random_signed(bits, rng);
    normalize(zz, out.f);
    if (out.f.deg == 6 && sgn(disc(zz, out.f)) != 0) return out;
  }
  retries_exhausted();
}

std::string to_job_line(const OracleInstance& inst) { return std::to_string(inst.p) + ":" + to_string(inst.f); }

u64 random_odd_prime(u64 lo, u64 hi, Rng& rng) {
  lo = std::max<u64>(lo, 3);
  if (hi < lo) fail(ErrorCode::InvalidArgument, "random_odd_prime: empty range");
  std::uniform_int_distribution<u64> dist(lo, hi);
  for (int i = 0; i < 1 << 20; ++i) {
    const u64 c = dist(rng) | 1;
    if (c >= lo && c <= hi && is_prime_u64(c)) return c;
  }
  fail(ErrorCode::InvalidArgument, "random_odd_prime: no prime found");
}

}  // namespace g2euler
