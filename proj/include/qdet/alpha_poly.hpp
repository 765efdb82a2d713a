#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdet/ratfunc.hpp"

namespace qdet {

// Polynomial in alpha with coefficients in a field K (Q(q) or Q).  Dense,
// ascending powers, leading coefficient nonzero; zero = empty vector.
template <class K>
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(long value) : AlphaPoly(K(value)) {}  // NOLINT(google-explicit-constructor)
  AlphaPoly(const K& value) {  // NOLINT(google-explicit-constructor)
    if (!qdet::is_zero(value)) c_ = {value};
  }
  explicit AlphaPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static AlphaPoly alpha_power(size_t e, const K& coef = K(1)) {
    if (qdet::is_zero(coef)) return AlphaPoly();
    AlphaPoly p;
    p.c_.assign(e + 1, K(0));
    p.c_[e] = coef;
    return p;
  }
  // 1 + c*alpha, the shape of most printed singular factors.
  static AlphaPoly one_plus(const K& c) { return AlphaPoly(std::vector<K>{K(1), c}); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && qdet::is_one(c_[0]); }
  bool is_constant() const { return c_.size() <= 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero

  const K& operator[](size_t i) const {
    static const K kzero = K(0);
    return i < c_.size() ? c_[i] : kzero;
  }
  const std::vector<K>& coeffs() const { return c_; }
  K leading() const { return c_.empty() ? K(0) : c_.back(); }
  K constant_term() const { return c_.empty() ? K(0) : c_[0]; }

  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const AlphaPoly& a, const AlphaPoly& b) { return !(a == b); }

  AlphaPoly operator-() const {
    AlphaPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b) {
    AlphaPoly r;
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend AlphaPoly operator-(const AlphaPoly& a, const AlphaPoly& b) { return a + (-b); }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() || b.is_zero()) return AlphaPoly();
    AlphaPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (qdet::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        if (!qdet::is_zero(b.c_[j])) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  AlphaPoly& operator+=(const AlphaPoly& o) { return *this = *this + o; }
  AlphaPoly& operator-=(const AlphaPoly& o) { return *this = *this - o; }
  AlphaPoly& operator*=(const AlphaPoly& o) { return *this = *this * o; }

  AlphaPoly scaled(const K& c) const {
    if (qdet::is_zero(c)) return AlphaPoly();
    AlphaPoly r = *this;
    for (auto& x : r.c_) x = x * c;
    return r;
  }

  std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    AlphaPoly q, r = *this;
    if (r.degree() >= d.degree()) {
      q.c_.assign(static_cast<size_t>(r.degree() - d.degree()) + 1, K(0));
      K dl = d.leading();
      while (!r.is_zero() && r.degree() >= d.degree()) {
        K f = r.leading() / dl;
        size_t off = static_cast<size_t>(r.degree() - d.degree());
        q.c_[off] = f;
        for (size_t j = 0; j < d.c_.size(); ++j) r.c_[off + j] -= f * d.c_[j];
        r.trim();
      }
      q.trim();
    }
    return {q, r};
  }
  AlphaPoly div_exact(const AlphaPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Error("inexact division in K[alpha]");
    return q;
  }
  bool divides(const AlphaPoly& multiple) const {
    if (is_zero()) return multiple.is_zero();
    return multiple.divmod(*this).second.is_zero();
  }

  AlphaPoly monic() const {
    if (is_zero()) return *this;
    return scaled(K(1) / leading());
  }

  AlphaPoly derivative() const {
    AlphaPoly r;
    if (c_.size() <= 1) return r;
    r.c_.assign(c_.size() - 1, K(0));
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * K(static_cast<long>(i));
    r.trim();
    return r;
  }

  static AlphaPoly gcd(AlphaPoly a, AlphaPoly b) {
    while (!b.is_zero()) {
      AlphaPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  AlphaPoly pow(long e) const {
    if (e < 0) throw Error("negative power of alpha-polynomial");
    AlphaPoly result(1);
    AlphaPoly base = *this;
    for (long k = e; k > 0; k >>= 1) {
      if (k & 1) result *= base;
      if (k > 1) base *= base;
    }
    return result;
  }

  template <class E>
  E eval(const E& alpha0) const {
    E acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * alpha0 + E(c_[i]);
    return acc;
  }

  std::string str(const std::string& var = "a", const std::string& qvar = "v") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (qdet::is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeff_str(c_[i], qvar) + ")";
      if (i >= 1) {
        out += "*" + var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static std::string coeff_str(const RatFuncQ& c, const std::string& qvar) { return c.str(qvar); }
  static std::string coeff_str(const Rational& c, const std::string&) { return rat_str(c); }
  void trim() {
    while (!c_.empty() && qdet::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
bool is_zero(const AlphaPoly<K>& p) {
  return p.is_zero();
}
template <class K>
bool is_one(const AlphaPoly<K>& p) {
  return p.is_one();
}

// Apply q -> q^{-1} coefficientwise.
inline AlphaPoly<RatFuncQ> q_inverted(const AlphaPoly<RatFuncQ>& p) {
  std::vector<RatFuncQ> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(x.q_inverted());
  return AlphaPoly<RatFuncQ>(std::move(c));
}

}  // namespace qdet
