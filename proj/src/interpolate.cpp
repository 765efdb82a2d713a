#include "qdet/decomp.hpp"

namespace qdet::detail {

std::vector<Rational> newton_interpolate(const std::vector<Rational>& xs,
                                         std::vector<Rational> ys) {
  const size_t n = xs.size();
  if (ys.size() != n || n == 0) throw Error("interpolation needs matching nonempty nodes");
  // Divided differences in place.
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  // Expand the Newton form to monomial coefficients.
  std::vector<Rational> poly{ys[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    // poly = poly * (x - xs[i]) + ys[i]
    poly.insert(poly.begin(), Rational(0));
    for (size_t c = 0; c + 1 < poly.size(); ++c) poly[c] -= xs[i] * poly[c + 1];
    poly[0] += ys[i];
  }
  while (poly.size() > 1 && is_zero(poly.back())) poly.pop_back();
  return poly;
}

}  // namespace qdet::detail
