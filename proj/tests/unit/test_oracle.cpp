#include <doctest.h>

#include "g2euler/oracle.hpp"

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

}  // namespace

TEST_CASE("generators respect their constraints") {
  Rng rng(51);
  for (u64 p : {u64{3}, u64{5}, u64{7}, u64{23}}) {
    for (int i = 0; i < 10; ++i) {
      const OracleInstance a = gen_type1(p, 2 + 2 * (i % 3), rng);
      CHECK(a.type == ClusterType::T1);
      CHECK(a.v == 0);
      CHECK(a.f.deg == 6);
      CHECK(which_type(p_normalize(a.f, p)) == ClusterType::T1);

      const OracleInstance b = gen_type2a(p, 1 + 2 * (i % 2), 3, 1, rng);
      CHECK(b.v == 1);
      CHECK(valuation(b.f.lead(), p) == 1);
      CHECK(which_type(p_normalize(b.f, p)) == ClusterType::T2a);

      const OracleInstance c = gen_type2b(p, 1 + i % 4, rng);
      CHECK(c.v == c.n % 2);
      CHECK(c.expected.a1 == 0);
      CHECK(which_type(p_normalize(c.f, p)) == ClusterType::T2b);

      const OracleInstance d = gen_type4(p, 1 + i % 2, 3 + i % 2 + 2 * (i % 3), rng);
      CHECK(d.v == d.n % 2);
      CHECK(which_type(p_normalize(d.f, p)) == ClusterType::T4);
      for (const auto* inst : {&a, &b, &c, &d}) {
        CHECK(inst->has_expected);
        CHECK(validate_lpoly2(inst->expected));
        CHECK(sgn(disc(IntegerRing(p), inst->f)) != 0);
      }
    }
  }
}

TEST_CASE("type 2b construction is integral") {
  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    const u64 p = std::array<u64, 4>{3, 5, 7, 11}[static_cast<std::size_t>(i % 4)];
    const OracleInstance inst = gen_type2b(p, 1 + i % 5, rng);
    CHECK(inst.f.deg == 6);
    CHECK(inst.expected.a1 == 0);
    CHECK(inst.expected.a2 * inst.expected.a2 <= 4 * static_cast<i128>(p * p));
  }
}

TEST_CASE("generator argument checks") {
  Rng rng(53);
  CHECK(code_of([&] { (void)gen_type1(7, 3, rng); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)gen_type1(7, 0, rng); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)gen_type2a(7, 2, 3, 0, rng); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)gen_type2a(7, 2, 2, 1, rng); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)gen_type2b(7, 0, rng); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)gen_type4(7, 2, 2, rng); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)gen_type4(7, 1, 4, rng); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)gen_type1(10007, 2, rng); }) == ErrorCode::FieldTooLarge);

  OracleOptions fast;
  fast.compute_expected = false;
  const OracleInstance big = gen_type1(1000003, 2, rng, fast);
  CHECK_FALSE(big.has_expected);
  CHECK(which_type(p_normalize(big.f, 1000003)) == ClusterType::T1);
}

TEST_CASE("random_instance is reproducible") {
  for (ClusterType t : {ClusterType::T1, ClusterType::T2a, ClusterType::T2b, ClusterType::T4}) {
    const OracleInstance a = random_instance(t, 13, 8, 77);
    const OracleInstance b = random_instance(t, 13, 8, 77);
    CHECK(to_job_line(a) == to_job_line(b));
    CHECK(a.expected == b.expected);
    CHECK(a.type == t);
    CHECK(a.n <= 8);
    CHECK(a.m <= 8);
  }
}

TEST_CASE("perturbation preserves type and factor") {
  Rng rng(54);
  for (int i = 0; i < 40; ++i) {
    const ClusterType t = static_cast<ClusterType>(i % 4);
    const OracleInstance inst = random_instance(t, 5, 6, 300 + static_cast<u64>(i));
    const OracleInstance big = perturb(inst, 256, rng);
    CHECK(perturbation_exponent(big) == perturbation_exponent(inst));
    CHECK(which_type(p_normalize(big.f, 5)) == t);
    CHECK(mpz_sizeinbase(big.f[0].get_mpz_t(), 2) >= 200);
    Rng r(1);
    EulerInput in;
    in.f = big.f;
    in.p = 5;
    CHECK(euler_factor(in, r) == inst.expected);
  }
}

TEST_CASE("brute force counts agree with the genus one counter") {
  Rng rng(55);
  for (u64 p : {u64{5}, u64{7}, u64{101}, u64{1009}}) {
    PrimeField F(p);
    for (int i = 0; i < 10; ++i) {
      FpPoly g;
      for (int j = 0; j <= 3 + i % 2; ++j) g[j] = F.random(rng);
      if (g[3 + i % 2] == 0) g[3 + i % 2] = 1;
      normalize(F, g);
      if (F.is_zero(disc(F, g))) continue;
      const Genus1ModelFp m{F, g};
      CHECK(brute_force_count(m) == count_points_naive(m));
    }
  }
  QuadField F9(3, 0, 1);
  const Genus1ModelFp2 m{F9, from_ints(F9, {0, -1, 0, 1})};
  CHECK(brute_force_count(m) == 16);
}

TEST_CASE("job lines and primes") {
  const OracleInstance inst = random_instance(ClusterType::T2a, 7, 4, 1);
  const std::string line = to_job_line(inst);
  CHECK(line.rfind("7:[", 0) == 0);
  CHECK(line.back() == ']');
  Rng rng(56);
  for (int i = 0; i < 50; ++i) {
    const u64 p = random_odd_prime(1000, 100000, rng);
    CHECK(is_prime_u64(p));
    CHECK(p >= 1000);
    CHECK(p <= 100000);
  }
  CHECK(code_of([&] { (void)random_odd_prime(24, 28, rng); }) == ErrorCode::InvalidArgument);
}
