#include "qdet/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qdet {

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.lo_, b.lo_);
  long hi = std::max(a.lo_ + static_cast<long>(a.c_.size()), b.lo_ + static_cast<long>(b.c_.size()));
  LaurentPoly r;
  r.lo_ = lo;
  r.c_.assign(static_cast<size_t>(hi - lo), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[static_cast<size_t>(a.lo_ - lo) + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[static_cast<size_t>(b.lo_ - lo) + i] += b.c_[i];
  r.trim();
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (qdet::is_zero(a.c_[i])) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (!qdet::is_zero(b.c_[j])) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) {
    if (!is_monomial()) throw Error("negative power of a non-unit Laurent polynomial");
    return LaurentPoly::v_power(lo_ * e, rat_pow(c_[0], e));
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  for (long k = e; k > 0; k >>= 1) {
    if (k & 1) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod_poly(const LaurentPoly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  if (is_zero()) return {LaurentPoly(), LaurentPoly()};
  // Align valuations to zero and divide as ordinary polynomials.
  long sa = valuation(), sd = d.valuation();
  std::vector<Rational> rem = c_;
  const std::vector<Rational>& dc = d.c_;
  long dr = static_cast<long>(rem.size()) - 1;
  long dd = static_cast<long>(dc.size()) - 1;
  std::vector<Rational> quot;
  if (dr >= dd) quot.assign(static_cast<size_t>(dr - dd + 1), Rational(0));
  while (dr >= dd) {
    if (!qdet::is_zero(rem[static_cast<size_t>(dr)])) {
      Rational f = rem[static_cast<size_t>(dr)] / dc.back();
      quot[static_cast<size_t>(dr - dd)] = f;
      for (long j = 0; j <= dd; ++j) rem[static_cast<size_t>(dr - dd + j)] -= f * dc[static_cast<size_t>(j)];
    }
    --dr;
  }
  LaurentPoly q, r;
  q.c_ = std::move(quot);
  q.lo_ = sa - sd;
  q.trim();
  r.c_ = std::move(rem);
  r.lo_ = sa;
  r.trim();
  return {q, r};
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
  auto [q, r] = divmod_poly(d);
  if (!r.is_zero()) throw Error("inexact Laurent division");
  return q;
}

bool LaurentPoly::divides(const LaurentPoly& multiple) const {
  if (is_zero()) return multiple.is_zero();
  return multiple.divmod_poly(*this).second.is_zero();
}

Rational LaurentPoly::content() const {
  if (is_zero()) return Rational(0);
  // gcd of numerators over lcm of denominators, sign positive.
  Integer num_gcd(0), den_lcm(1);
  for (const auto& x : c_) {
    if (qdet::is_zero(x)) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

LaurentPoly LaurentPoly::primitive_part() const {
  if (is_zero()) return *this;
  Rational c = content();
  if (sgn(leading_coeff()) < 0) c = -c;
  LaurentPoly r = *this;
  for (auto& x : r.c_) x /= c;
  return r;
}

LaurentPoly LaurentPoly::unit_normal() const {
  if (is_zero()) return *this;
  LaurentPoly r = primitive_part();
  r.lo_ -= r.valuation();
  return r;
}

LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero()) return b.unit_normal();
  if (b.is_zero()) return a.unit_normal();
  a = a.unit_normal();
  b = b.unit_normal();
  // Primitive PRS in Z[v].
  while (!b.is_zero()) {
    LaurentPoly r = a.divmod_poly(b).second;
    a = b;
    b = r.is_zero() ? r : r.unit_normal();
  }
  return a.unit_normal();
}

Rational LaurentPoly::eval(const Rational& v0) const {
  if (is_zero()) return Rational(0);
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * v0 + c_[i];
  return acc * rat_pow(v0, lo_);
}

bool LaurentPoly::even_only() const {
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!qdet::is_zero(c_[i]) && ((lo_ + static_cast<long>(i)) % 2 != 0)) return false;
  }
  return true;
}

Rational LaurentPoly::eval_q(const Rational& q0) const {
  if (is_zero()) return Rational(0);
  if (!even_only()) throw Error("eval_q on a polynomial with odd v-powers");
  Rational acc(0);
  for (long e = degree(); e >= valuation(); e -= 2) acc = acc * q0 + coeff(e);
  return acc * rat_pow(q0, valuation() / 2);
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& x = c_[i];
    if (qdet::is_zero(x)) continue;
    long e = lo_ + static_cast<long>(i);
    Rational a = x;
    if (!first) {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool unit_coeff = qdet::is_one(a) && e != 0;
    if (!unit_coeff) os << a.get_str();
    if (e != 0) {
      if (!unit_coeff) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace qdet
