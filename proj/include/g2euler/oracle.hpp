#pragma once

// Test-vector generator: sextics with a prescribed cluster type and depths, built
// from chosen genus one data, together with the Euler factor predicted by the
// construction (counted by brute force, independently of the genus1 module).

#include <string>

#include "g2euler/euler.hpp"

namespace g2euler {

struct OracleInstance {
  IntPoly f;
  u64 p = 0;
  ClusterType type = ClusterType::T1;
  int n = 0;
  int m = 0;  // second depth for types 2a and 4, otherwise 0
  int v = 0;  // v_p of the leading coefficient
  bool has_expected = false;
  LPoly2 expected;
  u64 seed = 0;
};

struct OracleOptions {
  /// Count points for the expected value (requires p <= 2^13).
  bool compute_expected = true;
};

inline constexpr u64 kOracleMaxPrime = u64{1} << 13;
inline constexpr int kOracleRetries = 64;

/// f = h0(x) p^{3n} h1((x - s1)/p^n), n even.
OracleInstance gen_type1(u64 p, int n, Rng& rng, const OracleOptions& opts = {});
/// f = p^v p^{3n} h1((x - s1)/p^n) p^{3m} h2((x - s2)/p^m), v = n = m mod 2.
OracleInstance gen_type2a(u64 p, int n, int m, int v, Rng& rng, const OracleOptions& opts = {});
/// f = p^v g conj(g) with g = p^{3n} H((x - z)/p^n) over Z[z]/(u), v = n mod 2.
OracleInstance gen_type2b(u64 p, int n, Rng& rng, const OracleOptions& opts = {});
/// f = p^v (x - s0)(x - s1 - p^n a1)(x - s1 - p^n a2) p^{3m} h2((x - s1)/p^m), m > n, v = m = n mod 2.
OracleInstance gen_type4(u64 p, int n, int m, Rng& rng, const OracleOptions& opts = {});

/// Random depths within [1, max_depth] satisfying the parity rules of the type, seeded.
OracleInstance random_instance(ClusterType type, u64 p, int max_depth, u64 seed, const OracleOptions& opts = {});

/// Exponent K such that adding p^K P(x) to f leaves the type and Euler factor unchanged.
int perturbation_exponent(const OracleInstance& inst);

/// Adds p^K P(x) with random P, |coefficients| < 2^max(8, max_bits - bits(p^K)).
OracleInstance perturb(const OracleInstance& inst, int max_bits, Rng& rng);

/// Points on y^2 = g(x) by a histogram of squares (small fields only).
u64 brute_force_count(const Genus1ModelFp& m);
u64 brute_force_count(const Genus1ModelFp2& m);

/// "p:[f0,...,f6]".
std::string to_job_line(const OracleInstance& inst);

/// Random odd prime in [lo, hi].
u64 random_odd_prime(u64 lo, u64 hi, Rng& rng);

}  // namespace g2euler
