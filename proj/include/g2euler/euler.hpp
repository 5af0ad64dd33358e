#pragma once

// Euler factors of genus two curves at odd primes of almost good reduction.

#include <optional>
#include <string>

#include "g2euler/cluster.hpp"
#include "g2euler/genus1.hpp"

namespace g2euler {

/// 1 + a1 T + a2 T^2 + p a1 T^3 + p^2 T^4.
struct LPoly2 {
  i64 a1 = 0;
  i128 a2 = 0;
  u64 p = 0;
  friend bool operator==(const LPoly2&, const LPoly2&) = default;
};

/// The five coefficients, constant term first.
std::array<mpz_class, 5> coefficients(const LPoly2& l);
/// "[1,a1,a2,p*a1,p^2]".
std::string to_string(const LPoly2& l);

/// L(E1) L(E2) for two curves over F_p.
LPoly2 product(const LPoly1& e1, const LPoly1& e2);
/// L(E, T^2) for a curve over F_{p^2}.
LPoly2 from_quadratic(const LPoly1& e, u64 p);

/// Weil-bound and real-root-pattern check.
bool validate_lpoly2(const LPoly2& l);

struct EulerInput {
  IntPoly f;
  std::optional<IntPoly> h;
  u64 p = 0;
  std::optional<u64> nonsquare;
  /// Recentering loop bound; 0 selects v_p(disc) + 1 of the normalised model.
  int max_iters = 0;
};

struct EulerOptions {
  Genus1Options genus1;
  int max_iters = 0;
  /// Type 1 only: test the discriminant on even iterations only.
  bool even_checks_only = false;
  /// Type 2b only: start the loop from the conjugate of z.
  bool conjugate_start = false;
};

struct EulerDetail {
  ClusterType type = ClusterType::T1;
  int v = 0;
  int outer_steps = 0;
  /// Type 1: loop length for E2. Types 2a/2b: loop lengths per cluster.
  /// Type 4: outer loop length in loop1, inner loop length in loop2.
  int loop1 = 0;
  int loop2 = 0;
  std::string e1, e2;
};

LPoly2 euler_type1(const PNormalized& nf, Rng& rng, const EulerOptions& opts = {}, EulerDetail* detail = nullptr);
LPoly2 euler_type2a(const PNormalized& nf, u64 nonsquare, Rng& rng, const EulerOptions& opts = {},
                    EulerDetail* detail = nullptr);
LPoly2 euler_type2b(const PNormalized& nf, Rng& rng, const EulerOptions& opts = {}, EulerDetail* detail = nullptr);
LPoly2 euler_type4(const PNormalized& nf, Rng& rng, const EulerOptions& opts = {}, EulerDetail* detail = nullptr);

/// Full pipeline: optional completion of the square, normalisation, classification, dispatch.
LPoly2 euler_factor(const EulerInput& input, Rng& rng, const EulerOptions& opts = {}, EulerDetail* detail = nullptr);

}  // namespace g2euler
