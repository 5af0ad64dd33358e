#pragma once

// Exact arithmetic over Z, F_p, F_{p^2} = F_p[z]/(ubar) and the order Z[z]/(u).
//
// Every ring is a small context object; its elements are plain values. The
// polynomial layer is written against the member functions shared by the four
// contexts (zero/one/add/sub/neg/mul/from_int/is_zero/eq, plus inv on fields).
// A default-constructed element is always the ring's zero.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "g2euler/error.hpp"

namespace g2euler {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;
using Rng = std::mt19937_64;

/// Largest supported prime (exclusive).
inline constexpr u64 kMaxPrime = u64{1} << 62;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 powmod(u64 base, u64 exp, u64 m);
/// Inverse modulo m; throws DivisionByZero when gcd(a, m) != 1.
u64 invmod(u64 a, u64 m);
u64 isqrt(u64 n);
u64 gcd_u64(u64 a, u64 b);

/// Throws NotOddPrime unless 3 <= p < 2^62 and p is odd. Primality is not checked.
void require_odd_prime(u64 p);
/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n);
/// Prime factorisation (trial division + Pollard-Brent), sorted by prime.
std::vector<std::pair<u64, int>> factor_u64(u64 n);

/// Legendre symbol (a/p) in {-1, 0, 1}. Rejects even p and p < 3.
int legendre(u64 a, u64 p);
int legendre(const mpz_class& a, u64 p);

/// Classical Tonelli-Shanks driven by a caller-supplied nonsquare s.
/// Returns the root in [0, (p-1)/2].
u64 sqrt_mod_p(u64 a, u64 s, u64 p);

/// Las Vegas search for a quadratic nonresidue mod p.
u64 find_nonsquare(u64 p, Rng& rng);

/// v_p(a) for a != 0; a huge sentinel for a == 0.
inline constexpr int kInfiniteValuation = 1 << 28;
int valuation(const mpz_class& a, u64 p);

class PrimeField {
 public:
  using Elt = u64;

  explicit PrimeField(u64 p);

  u64 modulus() const { return p_; }
  u64 characteristic() const { return p_; }
  u64 size() const { return p_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt from_int(i64 v) const;
  Elt from_mpz(const mpz_class& v) const;
  Elt add(Elt a, Elt b) const { return addmod(a, b, p_); }
  Elt sub(Elt a, Elt b) const { return submod(a, b, p_); }
  Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
  Elt mul(Elt a, Elt b) const { return mulmod(a, b, p_); }
  Elt inv(Elt a) const;
  Elt divexact(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, u64 e) const { return powmod(a, e, p_); }
  bool is_zero(Elt a) const { return a == 0; }
  bool eq(Elt a, Elt b) const { return a == b; }

  /// Quadratic character with chi(0) = 0.
  int chi(Elt a) const;
  /// Enumeration of the field: index in [0, size()).
  Elt element(u64 index) const { return index; }
  Elt random(Rng& rng) const { return std::uniform_int_distribution<u64>(0, p_ - 1)(rng); }
  unsigned __int128 key(Elt a) const { return a; }

 private:
  u64 p_;
};

struct Fp2Elt {
  u64 c0 = 0;
  u64 c1 = 0;
  friend bool operator==(const Fp2Elt&, const Fp2Elt&) = default;
};

/// F_p[z]/(z^2 + u1 z + u0) with the quadratic irreducible over F_p.
class QuadField {
 public:
  using Elt = Fp2Elt;

  QuadField(u64 p, u64 u1, u64 u0);

  const PrimeField& base() const { return base_; }
  u64 characteristic() const { return base_.modulus(); }
  u64 size() const { return base_.modulus() * base_.modulus(); }
  u64 u1() const { return u1_; }
  u64 u0() const { return u0_; }

  Elt zero() const { return {}; }
  Elt one() const { return {1, 0}; }
  Elt gen() const { return {0, 1}; }
  Elt from_base(u64 a) const { return {a, 0}; }
  Elt from_int(i64 v) const { return {base_.from_int(v), 0}; }
  Elt add(Elt a, Elt b) const { return {base_.add(a.c0, b.c0), base_.add(a.c1, b.c1)}; }
  Elt sub(Elt a, Elt b) const { return {base_.sub(a.c0, b.c0), base_.sub(a.c1, b.c1)}; }
  Elt neg(Elt a) const { return {base_.neg(a.c0), base_.neg(a.c1)}; }
  Elt mul(Elt a, Elt b) const;
  Elt scale(Elt a, u64 s) const { return {base_.mul(a.c0, s), base_.mul(a.c1, s)}; }
  Elt inv(Elt a) const;
  Elt divexact(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, u64 e) const;
  bool is_zero(Elt a) const { return a.c0 == 0 && a.c1 == 0; }
  bool eq(Elt a, Elt b) const { return a == b; }

  /// x^p, computed as the conjugation swapping the two roots of ubar.
  Elt frobenius(Elt a) const;
  u64 norm(Elt a) const;
  int chi(Elt a) const { return base_.chi(norm(a)); }
  Elt element(u64 index) const { return {index % base_.modulus(), index / base_.modulus()}; }
  Elt random(Rng& rng) const { return {base_.random(rng), base_.random(rng)}; }
  unsigned __int128 key(Elt a) const { return (static_cast<unsigned __int128>(a.c1) << 64) | a.c0; }

 private:
  PrimeField base_;
  u64 u1_;
  u64 u0_;
};

/// Z with a distinguished odd prime p used by reduce/lift and the p-power helpers.
class IntegerRing {
 public:
  using Elt = mpz_class;
  using Residue = PrimeField;

  explicit IntegerRing(u64 p);

  u64 prime() const { return p_; }
  const PrimeField& residue_field() const { return field_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt from_int(i64 v) const { return mpz_class(static_cast<long>(v)); }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt divexact(const Elt& a, const Elt& b) const;
  bool is_zero(const Elt& a) const { return sgn(a) == 0; }
  bool eq(const Elt& a, const Elt& b) const { return a == b; }

  /// a / d, throwing InexactDivision unless d | a.
  Elt divide_checked(const Elt& a, const mpz_class& d) const;
  Elt scale(const Elt& a, const mpz_class& s) const { return a * s; }

  u64 reduce(const Elt& a) const { return field_.from_mpz(a); }
  Elt lift(u64 a) const { return mpz_class(static_cast<unsigned long>(a)); }

 private:
  u64 p_;
  PrimeField field_;
};

struct OrderElt {
  mpz_class a0;
  mpz_class a1;
  friend bool operator==(const OrderElt& x, const OrderElt& y) { return x.a0 == y.a0 && x.a1 == y.a1; }
};

/// O = Z[z]/(z^2 + u1 z + u0) with residue field kappa = F_p[z]/(ubar).
class QuadOrder {
 public:
  using Elt = OrderElt;
  using Residue = QuadField;

  QuadOrder(u64 p, const mpz_class& u1, const mpz_class& u0);
  /// The canonical lift of an irreducible ubar over F_p.
  static QuadOrder from_residue(const QuadField& kappa);

  u64 prime() const { return p_; }
  const mpz_class& u1() const { return u1_; }
  const mpz_class& u0() const { return u0_; }
  const QuadField& residue_field() const { return kappa_; }

  Elt zero() const { return {}; }
  Elt one() const { return {1, 0}; }
  Elt gen() const { return {0, 1}; }
  Elt from_int(i64 v) const { return {mpz_class(static_cast<long>(v)), 0}; }
  Elt from_integer(const mpz_class& v) const { return {v, 0}; }
  Elt add(const Elt& a, const Elt& b) const { return {a.a0 + b.a0, a.a1 + b.a1}; }
  Elt sub(const Elt& a, const Elt& b) const { return {a.a0 - b.a0, a.a1 - b.a1}; }
  Elt neg(const Elt& a) const { return {-a.a0, -a.a1}; }
  Elt mul(const Elt& a, const Elt& b) const;
  bool is_zero(const Elt& a) const { return sgn(a.a0) == 0 && sgn(a.a1) == 0; }
  bool eq(const Elt& a, const Elt& b) const { return a == b; }
  /// Image under z -> -u1 - z, the nontrivial automorphism.
  Elt conj(const Elt& a) const { return {a.a0 - u1_ * a.a1, -a.a1}; }

  Elt divide_checked(const Elt& a, const mpz_class& d) const;
  Elt scale(const Elt& a, const mpz_class& s) const { return {a.a0 * s, a.a1 * s}; }

  /// pi: O -> kappa.
  Fp2Elt reduce(const Elt& a) const;
  /// Section of pi with coordinates in [0, p-1].
  Elt lift(const Fp2Elt& a) const;

 private:
  u64 p_;
  mpz_class u1_;
  mpz_class u0_;
  QuadField kappa_;
};

}  // namespace g2euler
