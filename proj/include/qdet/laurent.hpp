#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdet/rational.hpp"

namespace qdet {

// Laurent polynomial in v = q^{1/2} over the rationals.  Stored densely as
// coefficients of v^{lo}, v^{lo+1}, ... with both ends nonzero; the zero
// polynomial has an empty coefficient vector.  Equal values always have
// identical representations.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value) : LaurentPoly(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& value) {  // NOLINT(google-explicit-constructor)
    if (!qdet::is_zero(value)) {
      lo_ = 0;
      c_ = {value};
    }
  }

  static LaurentPoly v_power(long e, const Rational& coef = Rational(1)) {
    LaurentPoly p;
    if (!qdet::is_zero(coef)) {
      p.lo_ = e;
      p.c_ = {coef};
    }
    return p;
  }
  static LaurentPoly q_power(long e, const Rational& coef = Rational(1)) {
    return v_power(2 * e, coef);
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && lo_ == 0 && qdet::is_one(c_[0]); }
  // Units of Q[v^{+-1}] are the nonzero monomials.
  bool is_monomial() const { return c_.size() == 1; }

  long valuation() const {
    if (is_zero()) throw Error("valuation of zero");
    return lo_;
  }
  long degree() const {
    if (is_zero()) throw Error("degree of zero");
    return lo_ + static_cast<long>(c_.size()) - 1;
  }
  size_t term_count() const {
    size_t n = 0;
    for (const auto& x : c_)
      if (!qdet::is_zero(x)) ++n;
    return n;
  }

  Rational coeff(long e) const {
    if (e < lo_ || e >= lo_ + static_cast<long>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(e - lo_)];
  }
  Rational leading_coeff() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational trailing_coeff() const { return c_.empty() ? Rational(0) : c_.front(); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly shifted(long k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
  }

  // v -> v^{-1}.
  LaurentPoly inverted_variable() const {
    LaurentPoly r;
    if (is_zero()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.lo_ = -degree();
    return r;
  }

  LaurentPoly pow(long e) const;

  // Exact division in the Laurent ring; throws if not divisible.
  LaurentPoly div_exact(const LaurentPoly& d) const;
  // True polynomial divmod on valuation-aligned parts: *this = q*d + r with
  // deg r < deg d (all as polynomials in v after shifting by valuations).
  std::pair<LaurentPoly, LaurentPoly> divmod_poly(const LaurentPoly& d) const;
  bool divides(const LaurentPoly& multiple) const;

  // Canonical gcd: primitive over Z with valuation 0 and positive leading
  // coefficient (1 for coprime inputs).
  static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

  // Positive rational c such that (*this)/c has coprime integer coefficients.
  Rational content() const;
  LaurentPoly primitive_part() const;
  // Scale + shift so the result is Z-primitive with valuation 0 and positive
  // leading coefficient.  Returns the normalized poly.
  LaurentPoly unit_normal() const;

  Rational eval(const Rational& v0) const;
  bool even_only() const;
  // Evaluate at v^2 = q0 (requires even exponents only).
  Rational eval_q(const Rational& q0) const;

  std::string str(const std::string& var = "v") const;

 private:
  void trim() {
    size_t b = 0, e = c_.size();
    while (b < e && qdet::is_zero(c_[b])) ++b;
    while (e > b && qdet::is_zero(c_[e - 1])) --e;
    if (b == e) {
      c_.clear();
      lo_ = 0;
    } else {
      if (b > 0 || e < c_.size()) c_ = std::vector<Rational>(c_.begin() + b, c_.begin() + e);
      lo_ += static_cast<long>(b);
    }
  }

  long lo_ = 0;
  std::vector<Rational> c_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_one(const LaurentPoly& p) { return p.is_one(); }

}  // namespace qdet
