#pragma once

#include <string>

#include "qdet/laurent.hpp"

namespace qdet {

// Element of Q(q), stored as a reduced fraction of Laurent polynomials in v.
// Normalization: gcd(num, den) is a unit, den is Z-primitive with valuation 0
// and positive leading coefficient.  Equality is representational.
class RatFuncQ {
 public:
  RatFuncQ() : num_(), den_(1) {}
  RatFuncQ(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncQ(const Rational& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncQ(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncQ(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RatFuncQ v_power(long e) { return RatFuncQ(LaurentPoly::v_power(e)); }
  static RatFuncQ q_power(long e) { return RatFuncQ(LaurentPoly::q_power(e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

  RatFuncQ operator-() const {
    RatFuncQ r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }
  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RatFuncQ(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
  RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
  RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
  RatFuncQ& operator/=(const RatFuncQ& o) { return *this = *this / o; }

  RatFuncQ inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatFuncQ(den_, num_);
  }
  RatFuncQ pow(long e) const;

  // The field automorphism q -> q^{-1} (v -> v^{-1}).
  RatFuncQ q_inverted() const {
    return RatFuncQ(num_.inverted_variable(), den_.inverted_variable());
  }

  Rational eval(const Rational& v0) const {
    Rational d = den_.eval(v0);
    if (qdet::is_zero(d)) throw DivisionByZero();
    return num_.eval(v0) / d;
  }

  std::string str(const std::string& var = "v") const {
    if (den_.is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void normalize();

  LaurentPoly num_, den_;
};

inline bool is_zero(const RatFuncQ& x) { return x.is_zero(); }
inline bool is_one(const RatFuncQ& x) { return x.is_one(); }

// Coefficient contexts.  Algebra constructions are generic over these: the
// symbolic context computes over Q(q), the numeric one over Q with v = q^{1/2}
// pinned to a rational value (q = 1 is the classical oracle mode).
struct SymbolicQ {
  using Scalar = RatFuncQ;
  Scalar v_pow(long e) const { return RatFuncQ::v_power(e); }
  Scalar q_pow(long e) const { return RatFuncQ::q_power(e); }
  Scalar from_rational(const Rational& r) const { return RatFuncQ(r); }
  std::string mode() const { return "symbolic"; }
};

struct NumericQ {
  Rational v0;
  using Scalar = Rational;
  explicit NumericQ(Rational v) : v0(std::move(v)) {
    if (qdet::is_zero(v0)) throw Error("q must be nonzero");
  }
  Scalar v_pow(long e) const { return rat_pow(v0, e); }
  Scalar q_pow(long e) const { return rat_pow(v0, 2 * e); }
  Scalar from_rational(const Rational& r) const { return r; }
  std::string mode() const { return "q=" + rat_str(v0 * v0); }
};

}  // namespace qdet
