#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "qdet/matrix.hpp"

namespace qdet {

// Element of K[alpha]/(p) for a monic squarefree modulus p.  The modulus is
// shared; a constant may carry no ring at all and adopts one on contact.
template <class K>
class QuotientElem {
 public:
  using Poly = AlphaPoly<K>;
  using Ring = std::shared_ptr<const Poly>;

  QuotientElem() = default;
  QuotientElem(long c) : rep_(c) {}  // NOLINT(google-explicit-constructor)
  QuotientElem(const K& c) : rep_(c) {}  // NOLINT(google-explicit-constructor)
  QuotientElem(Ring ring, Poly rep) : ring_(std::move(ring)), rep_(std::move(rep)) {
    if (ring_) rep_ = rep_.divmod(*ring_).second;
  }

  static QuotientElem generator(Ring ring) {
    return QuotientElem(std::move(ring), Poly::alpha_power(1));
  }

  const Poly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend bool operator==(const QuotientElem& a, const QuotientElem& b) {
    return a.rep_ == b.rep_;
  }
  friend bool operator!=(const QuotientElem& a, const QuotientElem& b) { return !(a == b); }

  QuotientElem operator-() const { return with(ring_, -rep_); }
  friend QuotientElem operator+(const QuotientElem& a, const QuotientElem& b) {
    return with(merge(a, b), a.rep_ + b.rep_);
  }
  friend QuotientElem operator-(const QuotientElem& a, const QuotientElem& b) {
    return with(merge(a, b), a.rep_ - b.rep_);
  }
  friend QuotientElem operator*(const QuotientElem& a, const QuotientElem& b) {
    Ring r = merge(a, b);
    Poly prod = a.rep_ * b.rep_;
    if (r) prod = prod.divmod(*r).second;
    return with(r, std::move(prod));
  }
  QuotientElem& operator+=(const QuotientElem& o) { return *this = *this + o; }
  QuotientElem& operator-=(const QuotientElem& o) { return *this = *this - o; }
  QuotientElem& operator*=(const QuotientElem& o) { return *this = *this * o; }

  QuotientElem inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (!ring_ || rep_.is_constant())
      return with(ring_, Poly(K(1) / rep_.constant_term()));
    // Extended Euclid: s*rep + t*p = g.  g constant means rep is invertible;
    // otherwise g is a proper factor of the modulus.
    Poly r0 = *ring_, r1 = rep_;
    Poly s0, s1(1);
    while (!r1.is_zero()) {
      auto [q, r2] = r0.divmod(r1);
      Poly s2 = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (!r0.is_constant()) throw ZeroDivisorError(r0.monic().str());
    return with(ring_, s0.scaled(K(1) / r0.constant_term()));
  }
  friend QuotientElem operator/(const QuotientElem& a, const QuotientElem& b) {
    return a * b.inverse();
  }

 private:
  static QuotientElem with(Ring r, Poly p) {
    QuotientElem e;
    e.ring_ = std::move(r);
    e.rep_ = std::move(p);
    if (e.ring_) e.rep_ = e.rep_.divmod(*e.ring_).second;
    return e;
  }
  static Ring merge(const QuotientElem& a, const QuotientElem& b) {
    if (a.ring_ && b.ring_ && *a.ring_ != *b.ring_)
      throw Error("mixed quotient-ring moduli");
    return a.ring_ ? a.ring_ : b.ring_;
  }

  Ring ring_;
  Poly rep_;
};

template <class K>
bool is_zero(const QuotientElem<K>& e) {
  return e.is_zero();
}
template <class K>
QuotientElem<K> field_inv(const QuotientElem<K>& e) {
  return e.inverse();
}

// A point of the alpha-line over K: either an explicit value in K or a root
// of a monic squarefree polynomial of degree >= 2.
template <class K>
struct AlgebraicPoint {
  std::optional<K> value;
  std::optional<AlphaPoly<K>> modulus;
  std::string label;

  static AlgebraicPoint at(K v, std::string lbl = "") {
    AlgebraicPoint p;
    p.value = std::move(v);
    p.label = std::move(lbl);
    return p;
  }
  static AlgebraicPoint root_of(AlphaPoly<K> p, std::string lbl = "") {
    if (p.degree() < 2) throw Error("root_of expects degree >= 2; use an explicit value");
    AlphaPoly<K> m = p.monic();
    if (!AlphaPoly<K>::gcd(m, m.derivative()).is_constant())
      throw Error("modulus is not squarefree");
    AlgebraicPoint pt;
    pt.modulus = std::move(m);
    pt.label = std::move(lbl);
    return pt;
  }

  bool is_value() const { return value.has_value(); }

  std::string describe() const {
    if (!label.empty()) return label;
    if (value) return str_of(*value);
    return "root of " + modulus->str();
  }

 private:
  static std::string str_of(const RatFuncQ& v) { return v.str("v"); }
  static std::string str_of(const Rational& v) { return rat_str(v); }
};

// Substitute a point into a polynomial matrix and compute the exact rank.
// Value points over Q(q) are cleared to Laurent matrices and ranked
// fraction-free; roots go through the quotient ring (a non-invertible pivot
// with a reducible modulus raises ZeroDivisorError with a factor witness).
size_t rank_at_point(const PolyMatrix<AlphaPoly<RatFuncQ>>& m,
                     const AlgebraicPoint<RatFuncQ>& pt);
size_t rank_at_point(const PolyMatrix<AlphaPoly<Rational>>& m,
                     const AlgebraicPoint<Rational>& pt);

template <class K>
std::vector<std::vector<QuotientElem<K>>> substitute_root(
    const PolyMatrix<AlphaPoly<K>>& m, const AlphaPoly<K>& modulus) {
  auto ring = std::make_shared<const AlphaPoly<K>>(modulus.monic());
  auto alpha = QuotientElem<K>::generator(ring);
  std::vector<std::vector<QuotientElem<K>>> out(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    out[i].reserve(m.cols());
    for (size_t j = 0; j < m.cols(); ++j)
      out[i].push_back(m.at(i, j).template eval<QuotientElem<K>>(alpha));
  }
  return out;
}

}  // namespace qdet
