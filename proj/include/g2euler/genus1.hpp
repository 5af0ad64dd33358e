#pragma once

// L-polynomials of genus one curves y^2 = g(x), deg g in {3, 4}, over F_p and F_{p^2}.

#include "g2euler/poly.hpp"

namespace g2euler {

/// 1 - a T + q T^2.
struct LPoly1 {
  i64 a = 0;
  u64 q = 0;
  friend bool operator==(const LPoly1&, const LPoly1&) = default;
};

template <class F>
struct Genus1Model {
  F field;
  PolyOf<F> g;
};

using Genus1ModelFp = Genus1Model<PrimeField>;
using Genus1ModelFp2 = Genus1Model<QuadField>;

inline constexpr u64 kNaiveLimit = u64{1} << 16;

struct Genus1Options {
  /// Fields of size <= this are counted exhaustively.
  u64 naive_threshold = kNaiveLimit;
  /// Always go through the group-order search, even for small fields.
  bool force_bsgs = false;
  /// Random points tried before the search gives up.
  int max_points = 256;
};

/// Throws DegreeError / NotSquarefree unless deg g in {3, 4} and disc(g) != 0.
template <class F>
void validate_model(const Genus1Model<F>& m);

/// Projective point count by a character sum over the field (OpenMP).
template <class F>
u64 count_points_naive(const Genus1Model<F>& m, u64 limit = kNaiveLimit);

/// Single-threaded reference for count_points_naive.
template <class F>
u64 count_points_naive_serial(const Genus1Model<F>& m, u64 limit = kNaiveLimit);

/// x^4 g(1/x) for a quartic with g(0) = 0.
template <class F>
Genus1Model<F> quartic_to_cubic(const Genus1Model<F>& m);

/// Y^2 = X^3 - 27 I X - 27 J from the classical invariants of the quartic.
template <class F>
Genus1Model<F> quartic_jacobian(const Genus1Model<F>& m);

/// #E(F_q) for a cubic model by baby-step giant-step on the curve and its twist.
template <class F>
u64 group_order_bsgs(const Genus1Model<F>& m, Rng& rng, int max_points = 256);

template <class F>
LPoly1 lpoly1(const Genus1Model<F>& m, Rng& rng, const Genus1Options& opts = {});

}  // namespace g2euler
