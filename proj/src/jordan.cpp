#include "parcount/jordan.hpp"

#include "parcount/poly.hpp"

namespace parcount {

long long element_order(const Mat& g) {
  PARCOUNT_CHECK(g.det() != 0, "order of a singular matrix");
  Mat p = g;
  long long ord = 1;
  const long long cap = 100'000'000;
  while (!p.is_identity()) {
    p = p * g;
    ++ord;
    PARCOUNT_CHECK(ord < cap, "element order runaway");
  }
  return ord;
}

bool is_semisimple(const Mat& m) {
  Poly chi = m.charpoly();
  Poly radical = Poly::one(m.field());
  for (const auto& [f, mult] : poly_factor(chi)) radical = radical * f;
  return eval_poly_at(radical, m).is_zero();
}

JordanPairMult jordan_mult(const Mat& g) {
  if (g.det() == 0) throw ConfigError("multiplicative Jordan decomposition needs an invertible matrix");
  const int p = g.field()->p();
  long long ord = element_order(g);
  long long pt = 1;
  while (ord % p == 0) {
    ord /= p;
    pt *= p;
  }
  const long long s = ord;  // prime-to-p part of the order
  // c with pt * c = 1 mod s; then g_s = g^{pt*c} has p'-order and
  // g_u = g * g_s^{-1} has p-power order, both powers of g.
  long long c = 1;
  if (s > 1) {
    c = 0;
    for (long long k = 1; k < s; ++k)
      if ((pt % s) * k % s == 1) {
        c = k;
        break;
      }
    PARCOUNT_CHECK(c != 0, "no inverse of the p-part modulo the p'-part");
  }
  JordanPairMult out;
  out.s = g.pow(pt * c);
  out.u = g * *out.s.inverse();
  PARCOUNT_CHECK(out.s.commutes_with(out.u), "Jordan parts must commute");
  PARCOUNT_CHECK(out.s * out.u == g, "Jordan parts must recombine");
  PARCOUNT_CHECK(is_semisimple(out.s), "semisimple part fails the radical test");
  PARCOUNT_CHECK((out.u - Mat::identity(g.field(), g.n())).is_nilpotent(), "unipotent part fails nilpotency");
  return out;
}

JordanPairAdd jordan_add(const Mat& x) {
  const FieldSpec* F = x.field();
  Poly chi = x.charpoly();
  Poly radical = Poly::one(F);
  for (const auto& [f, mult] : poly_factor(chi)) radical = radical * f;
  // Newton iteration z <- z - rad(z) * rad'(z)^{-1}; converges to the
  // semisimple part since gcd(rad, rad') = 1 for the separable radical.
  Mat z = x;
  for (int iter = 0; iter < 12; ++iter) {
    Mat val = eval_poly_at(radical, z);
    if (val.is_zero()) break;
    Mat dval = eval_poly_at(radical.derivative(), z);
    auto inv = dval.inverse();
    PARCOUNT_CHECK(inv.has_value(), "Newton derivative not invertible");
    z = z - val * (*inv);
  }
  PARCOUNT_CHECK(eval_poly_at(radical, z).is_zero(), "Newton iteration did not converge");
  JordanPairAdd out{z, x - z};
  PARCOUNT_CHECK(out.s.commutes_with(out.n), "Jordan parts must commute");
  PARCOUNT_CHECK(out.n.is_nilpotent(), "nilpotent part fails nilpotency");
  PARCOUNT_CHECK(is_semisimple(out.s), "semisimple part fails the radical test");
  return out;
}

}  // namespace parcount
