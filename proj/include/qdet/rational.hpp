#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qdet {

using Integer = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

// Thrown when a quotient-ring element is not invertible; `witness` is a
// nontrivial factor of the modulus (canonical serialization).
struct ZeroDivisorError : Error {
  std::string witness;
  explicit ZeroDivisorError(std::string w)
      : Error("zero divisor in quotient ring; modulus splits by factor " + w),
        witness(std::move(w)) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

inline Rational rat_pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (is_zero(x)) {
    if (e < 0) throw DivisionByZero();
    return Rational(0);
  }
  Rational base = x;
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), ue);
  mpz_pow_ui(num.get_den_mpz_t(), base.get_den_mpz_t(), ue);
  num.canonicalize();
  if (e < 0) return Rational(1) / num;
  return num;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace qdet
