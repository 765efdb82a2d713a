#include "qdet/point.hpp"

namespace qdet {

size_t rank_at_point(const PolyMatrix<AlphaPoly<RatFuncQ>>& m,
                     const AlgebraicPoint<RatFuncQ>& pt) {
  if (pt.is_value()) {
    // Evaluate, then clear row denominators to land in Z[v] for a
    // fraction-free rank.
    PolyMatrix<LaurentPoly> cleared(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
      std::vector<RatFuncQ> row(m.cols());
      LaurentPoly lcm(1);
      for (size_t j = 0; j < m.cols(); ++j) {
        row[j] = m.at(i, j).eval(*pt.value);
        if (!row[j].is_zero()) {
          const LaurentPoly& d = row[j].den();
          lcm = lcm.div_exact(LaurentPoly::gcd(lcm, d)) * d;
        }
      }
      for (size_t j = 0; j < m.cols(); ++j)
        cleared.at(i, j) = row[j].num() * lcm.div_exact(row[j].is_zero() ? LaurentPoly(1) : row[j].den());
    }
    return bareiss_rank(std::move(cleared));
  }
  return gauss_rank(substitute_root(m, *pt.modulus));
}

size_t rank_at_point(const PolyMatrix<AlphaPoly<Rational>>& m,
                     const AlgebraicPoint<Rational>& pt) {
  if (pt.is_value()) {
    std::vector<std::vector<Rational>> rows(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
      rows[i].reserve(m.cols());
      for (size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j).eval(*pt.value));
    }
    return gauss_rank(std::move(rows));
  }
  return gauss_rank(substitute_root(m, *pt.modulus));
}

}  // namespace qdet
