#include <doctest.h>

#include "g2euler/poly.hpp"

using namespace g2euler;

namespace {

template <class F>
PolyOf<F> random_poly(const F& k, int deg, Rng& rng) {
  PolyOf<F> g;
  for (int i = 0; i <= deg; ++i) g[i] = k.random(rng);
  if (k.is_zero(g[deg])) g[deg] = k.one();
  normalize(k, g);
  return g;
}

IntPoly random_int_poly(int deg, int bits, Rng& rng) {
  std::vector<mpz_class> c;
  for (int i = 0; i <= deg; ++i) {
    mpz_class v = static_cast<unsigned long>(rng() >> (64 - bits));
    c.push_back(rng() & 1 ? mpz_class(-v) : v);
  }
  if (sgn(c.back()) == 0) c.back() = 1;
  return int_poly(c);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("gcd_k examples") {
  PrimeField F7(7);
  const FpPoly f = mul(F7, pow(F7, from_ints(F7, {-2, 1}), 3), from_ints(F7, {1, 1, 0, 1}));
  CHECK(equal(F7, gcd_k(F7, f, 3), from_ints(F7, {-2, 1})));
  const FpPoly sqf = from_ints(F7, {1, 1, 0, 1});
  for (int k = 2; k <= 6; ++k) CHECK(equal(F7, gcd_k(F7, sqf, k), from_ints(F7, {1})));

  PrimeField F3(3);
  CHECK(equal(F3, gcd_k(F3, from_ints(F3, {0, 0, 0, 0, 0, 0, 1}), 6), from_ints(F3, {0, 1})));
  const FpPoly cube = pow(F3, from_ints(F3, {1, 0, 1}), 3);
  CHECK(equal(F3, gcd_k(F3, cube, 3), from_ints(F3, {1, 0, 1})));
  CHECK(code_of([&] { (void)gcd_k(F3, cube, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("gcd_k divisibility chain") {
  Rng rng(11);
  for (u64 p : {u64{3}, u64{5}, u64{7}, u64{11}}) {
    PrimeField F(p);
    for (int i = 0; i < 200; ++i) {
      // products of small random factors give plenty of repeated roots
      FpPoly f = from_ints(F, {1});
      while (f.deg < 4) {
        const FpPoly g = random_poly(F, 1 + static_cast<int>(rng() % 2), rng);
        if (f.deg + g.deg > 6) break;
        f = mul(F, f, g);
        if (rng() & 1 && f.deg + g.deg <= 6) f = mul(F, f, g);
      }
      FpPoly prev = make_monic(F, f);
      for (int k = 2; k <= 6; ++k) {
        const FpPoly g = gcd_k(F, f, k);
        CHECK(divides(F, g, prev));
        prev = g;
      }
    }
  }
}

TEST_CASE("derivative and exhaustive gcd_k agree for p > deg f") {
  Rng rng(12);
  for (u64 p : {u64{7}, u64{11}}) {
    PrimeField F(p);
    for (int i = 0; i < 300; ++i) {
      FpPoly f = from_ints(F, {1});
      const int parts = 1 + static_cast<int>(rng() % 4);
      for (int j = 0; j < parts; ++j) {
        const FpPoly g = random_poly(F, 1 + static_cast<int>(rng() % 2), rng);
        const int e = 1 + static_cast<int>(rng() % 3);
        if (f.deg + e * g.deg > 6) continue;
        f = mul(F, f, pow(F, g, e));
      }
      if (f.deg < 1) continue;
      for (int k = 1; k <= 6; ++k) CHECK(equal(F, gcd_k_derivative(F, f, k), gcd_k_exhaustive(F, f, k)));
    }
  }
}

TEST_CASE("gcd_k over F_{p^2}") {
  QuadField K(3, 0, 1);
  const Fp2Elt z = K.gen();
  Fp2Poly lin;
  lin[0] = K.neg(z);
  lin[1] = K.one();
  lin.deg = 1;
  const Fp2Poly f = mul(K, pow(K, lin, 3), from_ints(K, {1, 0, 1}));  // (x - z)^3 (x^2 + 1)
  // x^2 + 1 = (x - z)(x + z), so the multiplicity of x - z is 4
  CHECK(equal(K, gcd_k(K, f, 3), pow(K, lin, 2)));
  CHECK(equal(K, gcd_k(K, f, 4), lin));
}

TEST_CASE("discriminants") {
  IntegerRing zz(5);
  CHECK(disc(zz, int_poly({7, 3, 1})) == 9 - 28);
  CHECK(disc(zz, int_poly({5, 2, 0, 1})) == -4 * 8 - 27 * 25);
  CHECK(disc(zz, mul(zz, int_poly({1, -2, 1}), int_poly({-2, 1}))) == 0);
  CHECK(code_of([&] { (void)disc(zz, int_poly({1, 1})); }) == ErrorCode::DegreeError);

  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const int deg = 2 + static_cast<int>(rng() % 5);
    const IntPoly f = random_int_poly(deg, 20, rng);
    const mpz_class d = disc(zz, f);
    CHECK(d == disc_sylvester(zz, f));
    CHECK(d == disc(zz, taylor_shift(zz, f, mpz_class(static_cast<long>(rng() % 1000) - 500))));
  }
  for (u64 p : {u64{7}, u64{13}}) {
    PrimeField F(p);
    IntegerRing zp(p);
    for (int i = 0; i < 100; ++i) {
      const int deg = 2 + static_cast<int>(rng() % 5);
      const IntPoly f = random_int_poly(deg, 30, rng);
      if (valuation(f.lead(), p) > 0) continue;
      const FpPoly fb = reduce(zp, f);
      CHECK(disc(F, fb) == F.from_mpz(disc(zp, f)));
      CHECK(disc(F, fb) == disc_sylvester(F, fb));
      CHECK((disc(F, fb) == 0) == (gcd_k(F, fb, 2).deg > 0));
    }
  }
}

TEST_CASE("shift_scale") {
  IntegerRing z5(5), z3(3);
  CHECK(to_string(shift_scale(z5, int_poly({0, 0, 1}), 1, mpz_class(0), 2)) == "[0,0,1]");
  CHECK(to_string(shift_scale(z3, int_poly({-1, 3, -3, 1}), 1, mpz_class(1), 3)) == "[0,0,0,1]");
  CHECK(to_string(shift_scale(z5, int_poly({5, 0, 1}), 1, mpz_class(0), 1)) == "[1,0,5]");
  CHECK(code_of([&] { (void)shift_scale(z5, int_poly({1, 0, 1}), 1, mpz_class(0), 1); }) == ErrorCode::InexactDivision);

  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const IntPoly f = random_int_poly(6, 40, rng);
    const mpz_class r = static_cast<long>(rng() % 100);
    const int e = static_cast<int>(rng() % 3);
    // multiply through by p^6 so that any k <= 6 divides exactly
    const IntPoly g = scale(z5, f, mpz_class(15625));
    const int k = static_cast<int>(rng() % 7);
    const IntPoly s = shift_scale(z5, g, e, r, k);
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), 5, static_cast<unsigned long>(k));
    IntPoly direct = taylor_shift(z5, g, r);
    for (int j = 0; j <= direct.deg; ++j) {
      mpz_class pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), 5, static_cast<unsigned long>(e * j));
      direct[j] *= pe;
    }
    CHECK(equal(z5, scale(z5, s, pk), direct));
  }
}

TEST_CASE("shift_scale over the quadratic order") {
  QuadField K(3, 0, 1);
  QuadOrder O = QuadOrder::from_residue(K);
  // (x - z)^3 recentred at z with p-adic scaling gives x^3 scaled by p^3
  OrderPoly lin;
  lin[0] = O.neg(O.gen());
  lin[1] = O.one();
  lin.deg = 1;
  const OrderPoly cube = mul(O, mul(O, lin, lin), lin);
  const OrderPoly s = shift_scale(O, cube, 1, O.gen(), 3);
  CHECK(s.deg == 3);
  CHECK(s[3] == O.one());
  CHECK(O.is_zero(s[0]));
  const Fp2Poly r = reduce(O, lin);
  CHECK(r[0] == Fp2Elt{0, 2});
}

TEST_CASE("reduce and lift") {
  IntegerRing z7(7);
  PrimeField F7(7);
  const FpPoly r = reduce(z7, int_poly({3, 7}));
  CHECK(r.deg == 0);
  CHECK(r[0] == 3);
  Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    const IntPoly f = random_int_poly(6, 50, rng);
    const FpPoly fb = reduce(z7, f);
    CHECK(equal(F7, reduce(z7, lift(z7, fb)), fb));
    const IntPoly diff = sub(z7, f, lift(z7, fb));
    for (int j = 0; j <= diff.deg; ++j) CHECK(mpz_divisible_ui_p(diff[j].get_mpz_t(), 7));
  }
}

TEST_CASE("complete_square") {
  CHECK(to_string(complete_square(int_poly({1, 0, 0, 0, 0, 1}), int_poly({}))) == "[4,0,0,0,0,4]");
  CHECK(to_string(complete_square(int_poly({0, 0, 0, 0, 0, 1}), int_poly({1}))) == "[1,0,0,0,0,4]");
  CHECK(code_of([] { (void)complete_square(int_poly({0, 1}), int_poly({1})); }) == ErrorCode::DegreeError);
  CHECK(code_of([] { (void)complete_square(int_poly({0, 0, 0, 0, 0, 0, 1}), int_poly({})); }) ==
        ErrorCode::NotSquarefree);
  const IntPoly f = int_poly({mpz_class("-24854569174209566"), mpz_class("50048078951052415"),
                              mpz_class("3989955132045666"), mpz_class("-3052943051575761"),
                              mpz_class("-1266273619292236"), mpz_class("-23062462482396"),
                              mpz_class("-144061786290072")});
  const IntPoly g = complete_square(f, int_poly({0, 1, 1, 1}));
  CHECK(g.deg == 6);
  CHECK(g[6] == 4 * mpz_class("-144061786290072") + 1);
  CHECK(g[0] == 4 * mpz_class("-24854569174209566"));
}

TEST_CASE("squarefree_part") {
  PrimeField F7(7);
  const FpPoly c = from_ints(F7, {1, 1, 0, 1});
  const FpPoly f = scale(F7, mul(F7, pow(F7, from_ints(F7, {-1, 1}), 3), c), 3);
  CHECK(equal(F7, squarefree_part(F7, f), scale(F7, mul(F7, from_ints(F7, {-1, 1}), c), 3)));
  CHECK(equal(F7, squarefree_part(F7, c), c));
  CHECK(equal(F7, squarefree_part(F7, from_ints(F7, {0, 0, 0, 0, 0, -1, 1})), from_ints(F7, {0, -1, 1})));

  PrimeField F3(3);
  const FpPoly g = mul(F3, pow(F3, from_ints(F3, {1, 0, 1}), 2), from_ints(F3, {0, 1}));
  CHECK(equal(F3, squarefree_part(F3, g), from_ints(F3, {0, 1, 0, 1})));
  Rng rng(16);
  for (u64 p : {u64{3}, u64{5}}) {
    PrimeField F(p);
    for (int i = 0; i < 100; ++i) {
      const FpPoly a = random_poly(F, 1, rng), b = random_poly(F, 2, rng);
      const FpPoly h = mul(F, pow(F, a, 3), b);
      const FpPoly s = squarefree_part(F, h);
      CHECK(divides(F, s, h));
      CHECK(gcd_k_exhaustive(F, s, 2).deg == 0);
    }
  }
}
