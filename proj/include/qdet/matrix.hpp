#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "qdet/alpha_poly.hpp"

namespace qdet {

template <class T>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(size_t rows, size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static PolyMatrix identity(size_t n) {
    PolyMatrix m(n, n, T(0));
    for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const PolyMatrix& x, const PolyMatrix& y) { return !(x == y); }

  PolyMatrix transposed() const {
    PolyMatrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.cols_ != y.rows_) throw Error("matrix dimension mismatch");
    PolyMatrix m(x.rows_, y.cols_, T(0));
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x.at(i, k);
        if (is_zero(xik)) continue;
        for (size_t j = 0; j < y.cols_; ++j) m.at(i, j) += xik * y.at(k, j);
      }
    return m;
  }

  template <class F>
  auto map(F f) const -> PolyMatrix<decltype(f(std::declval<const T&>()))> {
    PolyMatrix<decltype(f(std::declval<const T&>()))> m(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m.at(i, j) = f(at(i, j));
    return m;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

// Fraction-free determinant (Bareiss).  R must be an integral domain with
// exact division; every division below is exact by the minor identity.
template <class R>
R bareiss_det(PolyMatrix<R> m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return R(1);
  R prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && is_zero(m.at(piv, k))) ++piv;
    if (piv == n) return R(0);
    if (piv != k) {
      for (size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)).div_exact(prev);
    prev = m.at(k, k);
  }
  R det = m.at(n - 1, n - 1);
  return negate ? -det : det;
}

// Fraction-free row echelon rank over an integral domain.
template <class R>
size_t bareiss_rank(PolyMatrix<R> m) {
  size_t r = 0;
  R prev(1);
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t piv = r;
    while (piv < m.rows() && is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (size_t j = c; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
    for (size_t i = r + 1; i < m.rows(); ++i) {
      for (size_t j = c + 1; j < m.cols(); ++j)
        m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)).div_exact(prev);
      m.at(i, c) = R(0);
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

inline Rational field_inv(const Rational& x) {
  if (is_zero(x)) throw DivisionByZero();
  return Rational(1) / x;
}
inline RatFuncQ field_inv(const RatFuncQ& x) { return x.inverse(); }

// Rank by Gaussian elimination over a field-like element type.  E needs
// is_zero, subtraction, multiplication and field_inv(); the latter may throw
// ZeroDivisorError (quotient rings), in which case another pivot is tried
// before the error propagates.
template <class E>
size_t gauss_rank(std::vector<std::vector<E>> m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    bool placed = false;
    std::optional<ZeroDivisorError> pending;
    for (size_t i = r; i < rows && !placed; ++i) {
      if (is_zero(m[i][c])) continue;
      try {
        E inv = field_inv(m[i][c]);
        std::swap(m[i], m[r]);
        for (size_t k = r + 1; k < rows; ++k) {
          if (is_zero(m[k][c])) continue;
          E f = m[k][c] * inv;
          for (size_t j = c; j < cols; ++j) m[k][j] = m[k][j] - f * m[r][j];
        }
        placed = true;
      } catch (const ZeroDivisorError& e) {
        pending = e;
      }
    }
    if (placed) {
      ++r;
    } else if (pending) {
      throw *pending;
    }
  }
  return r;
}

// Inverse of a matrix over a field K; throws on singular input.
template <class K>
PolyMatrix<K> field_inverse(PolyMatrix<K> m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  const size_t n = m.rows();
  PolyMatrix<K> inv = PolyMatrix<K>::identity(n);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && is_zero(m.at(piv, c))) ++piv;
    if (piv == n) throw Error("singular matrix");
    if (piv != c)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m.at(c, j), m.at(piv, j));
        std::swap(inv.at(c, j), inv.at(piv, j));
      }
    K d = K(1) / m.at(c, c);
    for (size_t j = 0; j < n; ++j) {
      m.at(c, j) = m.at(c, j) * d;
      inv.at(c, j) = inv.at(c, j) * d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(m.at(i, c))) continue;
      K f = m.at(i, c);
      for (size_t j = 0; j < n; ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(c, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(c, j);
      }
    }
  }
  return inv;
}

// Smith normal form over K[alpha] (K a field).  Returns the monic nonzero
// elementary divisors d_1 | d_2 | ...; their count is the rank.  The zero
// matrix yields an empty list.
template <class K>
std::vector<AlphaPoly<K>> smith_normal_form(PolyMatrix<AlphaPoly<K>> m) {
  using P = AlphaPoly<K>;
  std::vector<P> divisors;
  const size_t rows = m.rows(), cols = m.cols();
  size_t t = 0;
  auto find_min_nonzero = [&](size_t from) -> std::optional<std::pair<size_t, size_t>> {
    std::optional<std::pair<size_t, size_t>> best;
    long best_deg = 0;
    for (size_t i = from; i < rows; ++i)
      for (size_t j = from; j < cols; ++j) {
        if (m.at(i, j).is_zero()) continue;
        long d = m.at(i, j).degree();
        if (!best || d < best_deg) {
          best = {{i, j}};
          best_deg = d;
        }
      }
    return best;
  };
  while (t < rows && t < cols) {
    auto pos = find_min_nonzero(t);
    if (!pos) break;
    auto [pi, pj] = *pos;
    if (pi != t)
      for (size_t j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    if (pj != t)
      for (size_t i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pj));
    for (;;) {
      // Keep the pivot row monic; unit row scalings do not change divisors.
      if (!is_one(m.at(t, t).leading())) {
        K inv_lead = K(1) / m.at(t, t).leading();
        for (size_t j = t; j < cols; ++j) m.at(t, j) = m.at(t, j).scaled(inv_lead);
      }
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t).is_zero()) continue;
        auto [q, r] = m.at(i, t).divmod(m.at(t, t));
        for (size_t j = t; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
        if (!r.is_zero()) {
          for (size_t j = t; j < cols; ++j) std::swap(m.at(t, j), m.at(i, j));
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m.at(t, j).is_zero()) continue;
        auto [q, r] = m.at(t, j).divmod(m.at(t, t));
        for (size_t i = t; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (!r.is_zero()) {
          for (size_t i = t; i < rows; ++i) std::swap(m.at(i, t), m.at(i, j));
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide the rest of the submatrix for the divisor chain.
      bool chain_ok = true;
      for (size_t i = t + 1; i < rows && chain_ok; ++i)
        for (size_t j = t + 1; j < cols && chain_ok; ++j) {
          if (!m.at(i, j).is_zero() && !m.at(t, t).divides(m.at(i, j))) {
            for (size_t jj = t; jj < cols; ++jj) m.at(t, jj) += m.at(i, jj);
            chain_ok = false;
          }
        }
      if (chain_ok) break;
    }
    divisors.push_back(m.at(t, t).monic());
    ++t;
  }
  return divisors;
}

}  // namespace qdet
