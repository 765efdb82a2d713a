#pragma once

#include "qdet/alpha_poly.hpp"

namespace qdet {

// gcd(f, g) monic together with the squarefree part f / gcd(f, f') of the
// first argument, also monic.
template <class K>
std::pair<AlphaPoly<K>, AlphaPoly<K>> alpha_gcd_squarefree(const AlphaPoly<K>& f,
                                                           const AlphaPoly<K>& g) {
  if (f.is_zero() && g.is_zero()) throw Error("gcd of two zero polynomials");
  AlphaPoly<K> gc = AlphaPoly<K>::gcd(f, g);
  AlphaPoly<K> sqf;
  if (!f.is_zero())
    sqf = f.div_exact(AlphaPoly<K>::gcd(f, f.derivative())).monic();
  return {gc, sqf};
}

// Yun squarefree decomposition of a nonzero polynomial over a field of
// characteristic 0: pairwise coprime monic squarefree parts with their
// multiplicities; the product of parts^mult equals f up to the leading unit.
template <class K>
std::vector<std::pair<AlphaPoly<K>, int>> yun_squarefree(const AlphaPoly<K>& f) {
  if (f.is_zero()) throw Error("squarefree decomposition of zero");
  std::vector<std::pair<AlphaPoly<K>, int>> out;
  AlphaPoly<K> p = f.monic();
  if (p.degree() == 0) return out;
  AlphaPoly<K> g = AlphaPoly<K>::gcd(p, p.derivative());
  AlphaPoly<K> w = p.div_exact(g);
  AlphaPoly<K> y = p.derivative().div_exact(g);
  int mult = 1;
  while (w.degree() > 0) {
    AlphaPoly<K> z = y - w.derivative();
    AlphaPoly<K> h = AlphaPoly<K>::gcd(w, z);
    if (h.degree() > 0) out.emplace_back(h.monic(), mult);
    w = w.div_exact(h);
    y = z.div_exact(h);
    ++mult;
  }
  return out;
}

// Best-effort factorization result.  Factors are pairwise coprime, monic and
// squarefree; unit * prod(factors^exp) * prod(residual_parts^exp) == f
// exactly.  residual_parts holds squarefree pieces the splitter could not
// break further (degree >= 3 with no linear/quadratic factor found); the
// spec-level single residual is their product.
struct AlphaFactorization {
  RatFuncQ unit;
  std::vector<std::pair<AlphaPoly<RatFuncQ>, int>> factors;
  std::vector<std::pair<AlphaPoly<RatFuncQ>, int>> residual_parts;
  bool fully_resolved() const { return residual_parts.empty(); }
  AlphaPoly<RatFuncQ> residual() const {
    AlphaPoly<RatFuncQ> r(RatFuncQ(1));
    for (const auto& [p, e] : residual_parts) r *= p.pow(e);
    return r;
  }
  AlphaPoly<RatFuncQ> expand() const {
    AlphaPoly<RatFuncQ> r(unit);
    for (const auto& [p, e] : factors) r *= p.pow(e);
    return r * residual();
  }
};

AlphaFactorization factor_alpha(const AlphaPoly<RatFuncQ>& f);

// All roots of f in Q(q) found by the divisor-candidate search (complete for
// degree <= 2 pieces via the discriminant square test; best-effort beyond).
std::vector<RatFuncQ> linear_roots(const AlphaPoly<RatFuncQ>& f);

// Exact square root in Q[v^{+-1}] resp. Q(q), if one exists.
std::optional<LaurentPoly> laurent_sqrt(const LaurentPoly& p);
std::optional<RatFuncQ> ratfunc_sqrt(const RatFuncQ& x);

}  // namespace qdet
