#include "g2euler/modarith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace g2euler {

std::string_view error_token(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotOddPrime: return "not-odd-prime";
    case ErrorCode::NonResidue: return "non-residue";
    case ErrorCode::BadWitness: return "bad-witness";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::InexactDivision: return "inexact-division";
    case ErrorCode::DegreeError: return "degree";
    case ErrorCode::NotSquarefree: return "not-squarefree";
    case ErrorCode::DepthOverflow: return "depth-overflow";
    case ErrorCode::NotAlmostGood: return "not-almost-good";
    case ErrorCode::GoodReduction: return "good-reduction";
    case ErrorCode::FieldTooLarge: return "field-too-large";
    case ErrorCode::Ambiguous: return "ambiguous";
    case ErrorCode::HasseViolation: return "hasse-violation";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::ParseError: return "parse";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "internal";
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 m) {
  i128 r0 = m, r1 = a % m;
  i128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    i128 q = r0 / r1;
    i128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    i128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) fail(ErrorCode::DivisionByZero, "invmod: element is not invertible");
  if (t0 < 0) t0 += m;
  return static_cast<u64>(t0);
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

void require_odd_prime(u64 p) {
  if (p < 3 || (p & 1) == 0 || p >= kMaxPrime)
    fail(ErrorCode::NotOddPrime, "expected an odd prime below 2^62, got " + std::to_string(p));
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_brent(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    auto step = [&](u64 v) { return addmod(mulmod(v, v, n), c, n); };
    const u64 block = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (u64 i = 0; i < std::min(block, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
  std::vector<u64> primes;
  for (u64 d = 2; d < 1000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  if (n > 1) factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> result;
  for (u64 q : primes) {
    if (!result.empty() && result.back().first == q)
      ++result.back().second;
    else
      result.emplace_back(q, 1);
  }
  return result;
}

int legendre(u64 a, u64 p) {
  require_odd_prime(p);
  u64 n = p;
  a %= n;
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      u64 r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int legendre(const mpz_class& a, u64 p) {
  require_odd_prime(p);
  return legendre(static_cast<u64>(mpz_fdiv_ui(a.get_mpz_t(), p)), p);
}

u64 sqrt_mod_p(u64 a, u64 s, u64 p) {
  require_odd_prime(p);
  if (legendre(s, p) != -1) fail(ErrorCode::BadWitness, "sqrt_mod_p: witness is not a nonsquare");
  a %= p;
  if (a == 0) return 0;
  if (legendre(a, p) != 1) fail(ErrorCode::NonResidue, "sqrt_mod_p: argument is a nonresidue");

  u64 q = p - 1;
  unsigned e = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++e;
  }
  u64 z = powmod(s, q, p);
  u64 x = powmod(a, (q + 1) / 2, p);
  u64 b = powmod(a, q, p);
  unsigned r = e;
  while (b != 1) {
    unsigned t = 0;
    for (u64 bb = b; bb != 1; bb = mulmod(bb, bb, p)) ++t;
    u64 g = z;
    for (unsigned i = 0; i + t + 1 < r; ++i) g = mulmod(g, g, p);
    x = mulmod(x, g, p);
    z = mulmod(g, g, p);
    b = mulmod(b, z, p);
    r = t;
  }
  return std::min(x, p - x);
}

u64 find_nonsquare(u64 p, Rng& rng) {
  require_odd_prime(p);
  std::uniform_int_distribution<u64> dist(1, p - 1);
  for (;;) {
    u64 s = dist(rng);
    if (powmod(s, (p - 1) / 2, p) == p - 1) return s;
  }
}

int valuation(const mpz_class& a, u64 p) {
  if (sgn(a) == 0) return kInfiniteValuation;
  mpz_class rest;
  mpz_class prime(static_cast<unsigned long>(p));
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t()));
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(u64 p) : p_(p) { require_odd_prime(p); }

PrimeField::Elt PrimeField::from_int(i64 v) const {
  i128 r = static_cast<i128>(v) % static_cast<i128>(p_);
  if (r < 0) r += p_;
  return static_cast<u64>(r);
}

PrimeField::Elt PrimeField::from_mpz(const mpz_class& v) const {
  return static_cast<u64>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

PrimeField::Elt PrimeField::inv(Elt a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_p");
  return invmod(a, p_);
}

int PrimeField::chi(Elt a) const { return legendre(a, p_); }

QuadField::QuadField(u64 p, u64 u1, u64 u0) : base_(p), u1_(u1 % p), u0_(u0 % p) {
  u64 disc = base_.sub(base_.mul(u1_, u1_), base_.mul(4 % p, u0_));
  if (legendre(disc, p) != -1)
    fail(ErrorCode::InvalidArgument, "QuadField: z^2 + u1 z + u0 is not irreducible mod p");
}

QuadField::Elt QuadField::mul(Elt a, Elt b) const {
  const PrimeField& F = base_;
  u64 t = F.mul(a.c1, b.c1);
  u64 c0 = F.sub(F.mul(a.c0, b.c0), F.mul(u0_, t));
  u64 c1 = F.sub(F.add(F.mul(a.c0, b.c1), F.mul(a.c1, b.c0)), F.mul(u1_, t));
  return {c0, c1};
}

QuadField::Elt QuadField::frobenius(Elt a) const {
  return {base_.sub(a.c0, base_.mul(u1_, a.c1)), base_.neg(a.c1)};
}

u64 QuadField::norm(Elt a) const {
  const PrimeField& F = base_;
  u64 n = F.add(F.mul(a.c0, a.c0), F.mul(u0_, F.mul(a.c1, a.c1)));
  return F.sub(n, F.mul(u1_, F.mul(a.c0, a.c1)));
}

QuadField::Elt QuadField::inv(Elt a) const {
  if (is_zero(a)) fail(ErrorCode::DivisionByZero, "inverse of zero in F_p^2");
  return scale(frobenius(a), base_.inv(norm(a)));
}

QuadField::Elt QuadField::pow(Elt a, u64 e) const {
  Elt result = one();
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

IntegerRing::IntegerRing(u64 p) : p_(p), field_(p) {}

IntegerRing::Elt IntegerRing::divexact(const Elt& a, const Elt& b) const {
  if (sgn(b) == 0) fail(ErrorCode::DivisionByZero, "integer division by zero");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntegerRing::Elt IntegerRing::divide_checked(const Elt& a, const mpz_class& d) const {
  if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()))
    fail(ErrorCode::InexactDivision, "coefficient not divisible by the requested power of p");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

QuadOrder::QuadOrder(u64 p, const mpz_class& u1, const mpz_class& u0)
    : p_(p),
      u1_(u1),
      u0_(u0),
      kappa_(p, static_cast<u64>(mpz_fdiv_ui(u1.get_mpz_t(), p)),
             static_cast<u64>(mpz_fdiv_ui(u0.get_mpz_t(), p))) {}

QuadOrder QuadOrder::from_residue(const QuadField& kappa) {
  return QuadOrder(kappa.characteristic(), mpz_class(static_cast<unsigned long>(kappa.u1())),
                   mpz_class(static_cast<unsigned long>(kappa.u0())));
}

QuadOrder::Elt QuadOrder::mul(const Elt& a, const Elt& b) const {
  mpz_class t = a.a1 * b.a1;
  return {a.a0 * b.a0 - u0_ * t, a.a0 * b.a1 + a.a1 * b.a0 - u1_ * t};
}

QuadOrder::Elt QuadOrder::divide_checked(const Elt& a, const mpz_class& d) const {
  if (!mpz_divisible_p(a.a0.get_mpz_t(), d.get_mpz_t()) || !mpz_divisible_p(a.a1.get_mpz_t(), d.get_mpz_t()))
    fail(ErrorCode::InexactDivision, "order element not divisible by the requested power of p");
  Elt q;
  mpz_divexact(q.a0.get_mpz_t(), a.a0.get_mpz_t(), d.get_mpz_t());
  mpz_divexact(q.a1.get_mpz_t(), a.a1.get_mpz_t(), d.get_mpz_t());
  return q;
}

Fp2Elt QuadOrder::reduce(const Elt& a) const {
  return {static_cast<u64>(mpz_fdiv_ui(a.a0.get_mpz_t(), p_)), static_cast<u64>(mpz_fdiv_ui(a.a1.get_mpz_t(), p_))};
}

QuadOrder::Elt QuadOrder::lift(const Fp2Elt& a) const {
  return {mpz_class(static_cast<unsigned long>(a.c0)), mpz_class(static_cast<unsigned long>(a.c1))};
}

}  // namespace g2euler
