#include "qdet/ratfunc.hpp"

namespace qdet {

void RatFuncQ::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = LaurentPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  // Make the denominator Z-primitive with valuation 0 and positive leading
  // coefficient; the adjustment is a unit and goes into the numerator.
  long shift = den_.valuation();
  Rational c = den_.content();
  if (sgn(den_.leading_coeff()) < 0) c = -c;
  den_ = den_.shifted(-shift);
  LaurentPoly unit = LaurentPoly::v_power(-shift, Rational(1) / c);
  num_ = num_ * unit;
  den_ = den_ * LaurentPoly(Rational(1) / c);
}

RatFuncQ RatFuncQ::pow(long e) const {
  if (e == 0) return RatFuncQ(1);
  if (e < 0) return inverse().pow(-e);
  RatFuncQ result(1);
  RatFuncQ base = *this;
  for (long k = e; k > 0; k >>= 1) {
    if (k & 1) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

}  // namespace qdet
