#include <doctest.h>

#include "g2euler/genus1.hpp"

using namespace g2euler;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

template <class F>
PolyOf<F> random_squarefree(const F& k, int deg, Rng& rng) {
  for (;;) {
    PolyOf<F> g;
    for (int i = 0; i <= deg; ++i) g[i] = k.random(rng);
    if (k.is_zero(g[deg])) continue;
    normalize(k, g);
    if (!k.is_zero(disc(k, g))) return g;
  }
}

QuadField sample_fp2(u64 p, Rng& rng) {
  PrimeField F(p);
  return QuadField(p, 0, F.neg(find_nonsquare(p, rng)));  // z^2 - s
}

}  // namespace

TEST_CASE("naive point counts") {
  PrimeField F5(5);
  CHECK(count_points_naive(Genus1ModelFp{F5, from_ints(F5, {0, -1, 0, 1})}) == 8);
  CHECK(count_points_naive(Genus1ModelFp{F5, from_ints(F5, {1, 0, 0, 0, 1})}) == 4);
  CHECK(count_points_naive(Genus1ModelFp{F5, from_ints(F5, {0, 2, 4, 4})}) == 4);
  CHECK(count_points_naive(Genus1ModelFp{F5, from_ints(F5, {0, 1, 0, 1})}) == 4);
  QuadField F9(3, 0, 1);
  CHECK(count_points_naive(Genus1ModelFp2{F9, from_ints(F9, {0, -1, 0, 1})}) == 16);

  PrimeField big(70001);
  CHECK(code_of([&] { (void)count_points_naive(Genus1ModelFp{big, from_ints(big, {1, 1, 0, 1})}); }) ==
        ErrorCode::FieldTooLarge);
}

TEST_CASE("serial and parallel counts agree") {
  Rng rng(31);
  for (u64 p : {u64{5}, u64{101}, u64{4099}, u64{65521}}) {
    PrimeField F(p);
    for (int i = 0; i < 4; ++i) {
      const Genus1ModelFp m{F, random_squarefree(F, 3 + i % 2, rng)};
      CHECK(count_points_naive(m) == count_points_naive_serial(m));
    }
  }
  for (u64 p : {u64{3}, u64{67}, u64{251}}) {
    const QuadField K = sample_fp2(p, rng);
    for (int i = 0; i < 3; ++i) {
      const Genus1ModelFp2 m{K, random_squarefree(K, 3 + i % 2, rng)};
      CHECK(count_points_naive(m) == count_points_naive_serial(m));
    }
  }
}

TEST_CASE("model validation") {
  PrimeField F7(7);
  CHECK(code_of([&] { validate_model(Genus1ModelFp{F7, from_ints(F7, {0, 0, 1})}); }) == ErrorCode::DegreeError);
  CHECK(code_of([&] { validate_model(Genus1ModelFp{F7, from_ints(F7, {0, 0, 1, 1})}); }) == ErrorCode::NotSquarefree);
  Rng rng(1);
  CHECK(code_of([&] { (void)lpoly1(Genus1ModelFp{F7, from_ints(F7, {-1, 3, -3, 1})}, rng); }) ==
        ErrorCode::NotSquarefree);
}

TEST_CASE("quartic_to_cubic") {
  PrimeField F5(5);
  CHECK(equal(F5, quartic_to_cubic(Genus1ModelFp{F5, from_ints(F5, {0, 1, 0, 0, 1})}).g, from_ints(F5, {1, 0, 0, 1})));
  CHECK(equal(F5, quartic_to_cubic(Genus1ModelFp{F5, from_ints(F5, {0, 1, 0, 0, 2})}).g, from_ints(F5, {2, 0, 0, 1})));
  PrimeField F7(7);
  // x (x - 1)(x - 2)(x - 3) over F_7
  const FpPoly g = mul(F7, mul(F7, from_ints(F7, {0, 1}), from_ints(F7, {-1, 1})),
                       mul(F7, from_ints(F7, {-2, 1}), from_ints(F7, {-3, 1})));
  const Genus1ModelFp m{F7, g};
  const Genus1ModelFp c = quartic_to_cubic(m);
  CHECK(c.g.deg == 3);
  CHECK(count_points_naive(c) == count_points_naive(m));
  CHECK(code_of([&] { (void)quartic_to_cubic(Genus1ModelFp{F7, from_ints(F7, {1, 1, 0, 0, 1})}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("quartic_jacobian") {
  PrimeField F5(5);
  CHECK(equal(F5, quartic_jacobian(Genus1ModelFp{F5, from_ints(F5, {1, 0, 0, 0, 1})}).g, from_ints(F5, {0, 1, 0, 1})));
  PrimeField F3(3);
  CHECK(code_of([&] { (void)quartic_jacobian(Genus1ModelFp{F3, from_ints(F3, {1, 0, 0, 0, 1})}); }) ==
        ErrorCode::Unsupported);

  Rng rng(32);
  for (u64 p : {u64{11}, u64{13}, u64{101}, u64{1009}}) {
    PrimeField F(p);
    for (int i = 0; i < 25; ++i) {
      const Genus1ModelFp m{F, random_squarefree(F, 4, rng)};
      const Genus1ModelFp j = quartic_jacobian(m);
      CHECK(j.g.deg == 3);
      CHECK_FALSE(F.is_zero(disc(F, j.g)));
      CHECK(count_points_naive(j) == count_points_naive(m));
      // lambda^2 g has an isomorphic jacobian
      const u64 lam = 1 + rng() % (p - 1);
      const Genus1ModelFp j2 = quartic_jacobian(Genus1ModelFp{F, scale(F, m.g, F.mul(lam, lam))});
      CHECK(count_points_naive(j2) == count_points_naive(j));
    }
  }
}

TEST_CASE("group order search matches exhaustive counts") {
  Rng rng(33);
  PrimeField F101(101);
  const Genus1ModelFp e{F101, from_ints(F101, {1, 1, 0, 1})};
  CHECK(group_order_bsgs(e, rng) == count_points_naive(e));

  for (u64 p : {u64{1031}, u64{4099}, u64{32003}, u64{65521}}) {
    PrimeField F(p);
    for (int i = 0; i < 20; ++i) {
      const Genus1ModelFp m{F, random_squarefree(F, 3, rng)};
      CHECK(group_order_bsgs(m, rng) == count_points_naive(m));
    }
  }
  for (u64 p : {u64{11}, u64{37}, u64{127}}) {
    const QuadField K = sample_fp2(p, rng);
    for (int i = 0; i < 10; ++i) {
      const Genus1ModelFp2 m{K, random_squarefree(K, 3, rng)};
      CHECK(group_order_bsgs(m, rng) == count_points_naive(m));
    }
  }
  PrimeField F3(3);
  CHECK(code_of([&] { (void)group_order_bsgs(Genus1ModelFp{F3, from_ints(F3, {1, 2, 0, 1})}, rng); }) ==
        ErrorCode::Unsupported);
}

TEST_CASE("lpoly1 examples") {
  Rng rng(34);
  PrimeField F5(5);
  CHECK(lpoly1(Genus1ModelFp{F5, from_ints(F5, {0, -1, 0, 1})}, rng) == LPoly1{-2, 5});
  CHECK(lpoly1(Genus1ModelFp{F5, from_ints(F5, {1, 0, 0, 0, 1})}, rng) == LPoly1{2, 5});
  QuadField F9(3, 0, 1);
  CHECK(lpoly1(Genus1ModelFp2{F9, from_ints(F9, {0, -1, 0, 1})}, rng) == LPoly1{-6, 9});
}

TEST_CASE("supersingular and twisted curves") {
  Rng rng(35);
  Genus1Options forced;
  forced.force_bsgs = true;
  for (u64 p : {u64{1019}, u64{1000003}, u64{998244359}}) {
    if (!is_prime_u64(p) || p % 4 != 3) continue;
    PrimeField F(p);
    const Genus1ModelFp m{F, from_ints(F, {0, -1, 0, 1})};
    CHECK(lpoly1(m, rng, forced).a == 0);
  }
  for (u64 p : {u64{1009}, u64{65537}, u64{1000033}}) {
    PrimeField F(p);
    const u64 s = find_nonsquare(p, rng);
    for (int i = 0; i < 5; ++i) {
      const FpPoly g = random_squarefree(F, 3, rng);
      const LPoly1 e = lpoly1(Genus1ModelFp{F, g}, rng, forced);
      const LPoly1 t = lpoly1(Genus1ModelFp{F, scale(F, g, s)}, rng, forced);
      CHECK(t.a == -e.a);
      const u64 lam = 2 + rng() % (p - 2);
      CHECK(lpoly1(Genus1ModelFp{F, scale(F, g, F.mul(lam, lam))}, rng, forced) == e);
    }
  }
}

TEST_CASE("forced group-order path agrees with counting on quartics") {
  Rng rng(36);
  Genus1Options forced;
  forced.force_bsgs = true;
  for (u64 p : {u64{1009}, u64{2003}}) {
    PrimeField F(p);
    for (int i = 0; i < 10; ++i) {
      FpPoly g = random_squarefree(F, 4, rng);
      const Genus1ModelFp m{F, g};
      CHECK(lpoly1(m, rng, forced) == lpoly1(m, rng));
      // g(0) = 0 goes through the reversal path
      FpPoly r = mul(F, from_ints(F, {0, 1}), random_squarefree(F, 3, rng));
      if (F.is_zero(disc(F, r))) continue;
      const Genus1ModelFp mr{F, r};
      CHECK(lpoly1(mr, rng, forced) == lpoly1(mr, rng));
    }
  }
}
