#include "g2euler/poly.hpp"

#include <sstream>

namespace g2euler {

IntPoly int_poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> v;
  for (long x : coeffs) v.emplace_back(x);
  return int_poly(v);
}

IntPoly int_poly(const std::vector<mpz_class>& coeffs) { return make_poly(IntegerRing(3), coeffs); }

OrderPoly embed(const QuadOrder& order, const IntPoly& f) {
  OrderPoly h;
  for (int i = 0; i <= f.deg; ++i) h[i] = order.from_integer(f[i]);
  normalize(order, h);
  return h;
}

IntPoly complete_square(const IntPoly& f, const IntPoly& h) {
  if (f.deg > kMaxDegree || h.deg > 3) fail(ErrorCode::DegreeError, "complete_square: need deg f <= 6, deg h <= 3");
  IntegerRing zz(3);
  IntPoly g = add(zz, scale(zz, f, mpz_class(4)), mul(zz, h, h));
  if (g.deg != 5 && g.deg != 6) fail(ErrorCode::DegreeError, "4f + h^2 must have degree 5 or 6");
  if (sgn(disc(zz, g)) == 0) fail(ErrorCode::NotSquarefree, "4f + h^2 is not squarefree");
  return g;
}

namespace {

template <class E, class Fmt>
std::string join(const Poly<E>& f, Fmt fmt) {
  std::ostringstream os;
  os << '[';
  if (f.is_zero()) os << '0';
  for (int i = 0; i <= f.deg; ++i) {
    if (i) os << ',';
    fmt(os, f[i]);
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& f) {
  return join(f, [](std::ostream& os, const mpz_class& x) { os << x.get_str(); });
}

std::string to_string(const FpPoly& f) {
  return join(f, [](std::ostream& os, u64 x) { os << x; });
}

std::string to_string(const Fp2Poly& f) {
  return join(f, [](std::ostream& os, const Fp2Elt& x) { os << '(' << x.c0 << ',' << x.c1 << ')'; });
}

}  // namespace g2euler
