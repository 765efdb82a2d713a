#include "qdet/factor.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qdet {

namespace {

using P = AlphaPoly<RatFuncQ>;

constexpr size_t kMaxDivisors = 4096;
constexpr size_t kMaxCandidates = 50000;

// ---- integer factorization (trial division + Pollard rho) ----

void factor_integer(Integer n, std::map<Integer, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      ++out[Integer(p)];
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
    }
  }
  long d = 17;
  while (n > 1 && d < 100000) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
      ++out[Integer(d)];
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d));
    } else {
      d += 2;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 25) != 0) {
    ++out[n];
    return;
  }
  // Pollard rho with a few parameter retries; on failure keep the composite
  // as an atom (divisor enumeration just becomes coarser).
  for (unsigned long c = 1; c <= 8; ++c) {
    Integer x(2), y(2), g(1);
    for (int it = 0; it < 200000 && g == 1; ++it) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Integer diff = x > y ? x - y : y - x;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (g > 1 && g < n) {
      factor_integer(g, out);
      factor_integer(n / g, out);
      return;
    }
  }
  ++out[n];
}

std::vector<Integer> integer_divisors(const Integer& n, size_t cap = kMaxDivisors) {
  std::map<Integer, int> fac;
  factor_integer(n, fac);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : fac) {
    std::vector<Integer> next;
    Integer pk(1);
    for (int k = 0; k <= e; ++k) {
      for (const auto& d : divs) {
        next.push_back(d * pk);
        if (next.size() > cap) return next;
      }
      pk *= p;
    }
    divs = std::move(next);
  }
  return divs;
}

// ---- Z[x] helpers on integer coefficient vectors (x = q) ----

using ZPoly = std::vector<Integer>;  // ascending, trailing may be zero-free

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zeval(const ZPoly& p, long x) {
  Integer acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

bool zdivide(const ZPoly& num, const ZPoly& den, ZPoly& quot) {
  ZPoly rem = num;
  ztrim(rem);
  ZPoly d = den;
  ztrim(d);
  if (d.empty() || rem.size() < d.size()) return false;
  quot.assign(rem.size() - d.size() + 1, Integer(0));
  for (size_t k = quot.size(); k-- > 0;) {
    Integer lead = rem[k + d.size() - 1];
    if (lead != 0) {
      Integer f, r;
      mpz_fdiv_qr(f.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), d.back().get_mpz_t());
      if (r != 0) return false;  // leading coefficient does not divide
      quot[k] = f;
      for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
    }
  }
  ztrim(rem);
  if (!rem.empty()) return false;
  ztrim(quot);
  return true;
}

Integer zcontent(const ZPoly& p) {
  Integer g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Kronecker-style search for a nontrivial divisor of a primitive integer
// polynomial; best-effort under the candidate caps.
bool kronecker_divisor(const ZPoly& p, ZPoly& divisor) {
  size_t d = p.size() - 1;
  for (size_t m = 1; m <= d / 2; ++m) {
    // nodes 0, 1, -1, 2, -2, ... skipping roots of p
    std::vector<long> xs;
    for (long k = 0; xs.size() < m + 1 && k <= 40; k = k <= 0 ? -k + 1 : -k) {
      if (zeval(p, k) != 0) xs.push_back(k);
    }
    if (xs.size() < m + 1) return false;
    std::vector<std::vector<Integer>> choices;
    size_t total = 1;
    for (long x : xs) {
      Integer v = zeval(p, x);
      auto divs = integer_divisors(v, 64);
      std::vector<Integer> opts;
      for (const auto& dd : divs) {
        opts.push_back(dd);
        opts.push_back(-dd);
      }
      total *= opts.size();
      if (total > kMaxCandidates) return false;
      choices.push_back(std::move(opts));
    }
    std::vector<size_t> idx(xs.size(), 0);
    for (;;) {
      // Lagrange interpolation through (xs[i], choices[i][idx[i]]).
      std::vector<Rational> ys;
      for (size_t i = 0; i < xs.size(); ++i) ys.emplace_back(choices[i][idx[i]]);
      // divided differences
      std::vector<Rational> dd = ys;
      for (size_t k = 1; k < xs.size(); ++k)
        for (size_t i = xs.size() - 1; i >= k; --i) {
          dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - k]);
          if (i == k) break;
        }
      std::vector<Rational> poly{dd.back()};
      for (size_t i = xs.size() - 1; i-- > 0;) {
        poly.insert(poly.begin(), Rational(0));
        for (size_t c = 0; c + 1 < poly.size(); ++c) poly[c] -= Rational(xs[i]) * poly[c + 1];
        poly[0] += dd[i];
      }
      while (poly.size() > 1 && is_zero(poly.back())) poly.pop_back();
      bool integral = poly.size() >= 2;
      ZPoly cand;
      for (const auto& c : poly) {
        if (c.get_den() != 1) {
          integral = false;
          break;
        }
        cand.push_back(c.get_num());
      }
      if (integral) {
        ZPoly quot;
        if (zdivide(p, cand, quot)) {
          divisor = cand;
          return true;
        }
      }
      size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  return false;
}

void zfactor(const ZPoly& p, std::vector<ZPoly>& out) {
  ZPoly q = p;
  ztrim(q);
  if (q.size() <= 2) {
    if (q.size() == 2) out.push_back(q);
    return;
  }
  ZPoly div;
  if (q.size() - 1 <= 8 && kronecker_divisor(q, div)) {
    ZPoly quot;
    zdivide(q, div, quot);
    zfactor(div, out);
    zfactor(quot, out);
    return;
  }
  out.push_back(q);
}

// ---- Laurent <-> ZPoly over q (even v powers only) ----

struct ClearedPoly {
  // f scaled to Z[q][alpha]: coefficient i is qshift-normalized with整
  // integer coefficients in q.
  std::vector<ZPoly> coeffs;  // per alpha power, polynomial in q
  long qval = 0;              // common q-valuation factored out
};

ZPoly laurent_to_zpoly_q(const LaurentPoly& p, long qval) {
  // p must be even in v and have q-valuation >= qval; integer coefficients.
  ZPoly out;
  if (p.is_zero()) return out;
  long lo = p.valuation() / 2;
  for (long e = lo; e <= p.degree() / 2; ++e) {
    Rational c = p.coeff(2 * e);
    if (c.get_den() != 1) throw Error("expected integer coefficients after clearing");
    size_t idx = static_cast<size_t>(e - qval);
    if (out.size() <= idx) out.resize(idx + 1, Integer(0));
    out[idx] = c.get_num();
  }
  ztrim(out);
  return out;
}

std::optional<ClearedPoly> clear_to_zq(const P& f) {
  // common denominator
  LaurentPoly den(1);
  for (const auto& c : f.coeffs()) {
    if (c.is_zero()) continue;
    den = den.div_exact(LaurentPoly::gcd(den, c.den())) * c.den();
  }
  std::vector<LaurentPoly> nums;
  Rational content(0);
  std::optional<long> qval;
  for (const auto& c : f.coeffs()) {
    LaurentPoly n = c.num() * den.div_exact(c.is_zero() ? LaurentPoly(1) : c.den());
    if (!n.is_zero()) {
      if (!n.even_only()) return std::nullopt;
      long v = n.valuation() / 2;
      qval = qval ? std::min(*qval, v) : v;
      Rational cc = n.content();
      if (is_zero(content))
        content = cc;
      else {
        // gcd of rationals: gcd(num)/lcm(den)
        Integer ng, dl;
        mpz_gcd(ng.get_mpz_t(), content.get_num_mpz_t(), cc.get_num_mpz_t());
        mpz_lcm(dl.get_mpz_t(), content.get_den_mpz_t(), cc.get_den_mpz_t());
        content = Rational(ng, dl);
        content.canonicalize();
      }
    }
    nums.push_back(std::move(n));
  }
  if (!qval) return std::nullopt;
  ClearedPoly out;
  out.qval = *qval;
  for (auto& n : nums) {
    LaurentPoly scaled = n * LaurentPoly(Rational(1) / content);
    out.coeffs.push_back(laurent_to_zpoly_q(scaled, *qval));
  }
  return out;
}

RatFuncQ zpoly_to_ratfunc(const ZPoly& p, long qshift = 0) {
  LaurentPoly out;
  for (size_t i = 0; i < p.size(); ++i)
    out += LaurentPoly::q_power(static_cast<long>(i) + qshift, Rational(p[i]));
  return RatFuncQ(out);
}

std::vector<RatFuncQ> poly_divisor_values(const ZPoly& p, long max_qpow) {
  // All divisors c * q^j * prod(factor subsets) of p * q^{0..max_qpow}.
  std::vector<RatFuncQ> out;
  if (p.empty()) return out;
  std::vector<ZPoly> factors;
  ZPoly prim = p;
  Integer cont = zcontent(prim);
  if (prim.back() < 0) cont = -cont;
  for (auto& c : prim) {
    Integer t;
    mpz_divexact(t.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
    c = t;
  }
  zfactor(prim, factors);
  std::vector<RatFuncQ> base{RatFuncQ(1)};
  for (const auto& f : factors) {
    std::vector<RatFuncQ> next;
    for (const auto& b : base) {
      next.push_back(b);
      next.push_back(b * zpoly_to_ratfunc(f));
      if (next.size() > kMaxDivisors) return next;
    }
    base = std::move(next);
  }
  std::vector<Integer> idivs = integer_divisors(cont);
  for (const auto& d : idivs)
    for (long j = 0; j <= max_qpow; ++j)
      for (const auto& b : base) {
        out.push_back(b * RatFuncQ(Rational(d)) * RatFuncQ::q_power(j));
        if (out.size() > kMaxDivisors * 4) return out;
      }
  return out;
}

}  // namespace

std::optional<LaurentPoly> laurent_sqrt(const LaurentPoly& p) {
  if (p.is_zero()) return LaurentPoly();
  if (p.valuation() % 2 != 0) return std::nullopt;
  long half_val = p.valuation() / 2;
  long deg = p.degree() - p.valuation();
  if (deg % 2 != 0) return std::nullopt;
  // leading coefficient must be a rational square
  Rational lead = p.leading_coeff();
  if (sgn(lead) < 0) return std::nullopt;
  Integer ln, ld;
  if (mpz_perfect_square_p(lead.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(lead.get_den_mpz_t()) == 0)
    return std::nullopt;
  mpz_sqrt(ln.get_mpz_t(), lead.get_num_mpz_t());
  mpz_sqrt(ld.get_mpz_t(), lead.get_den_mpz_t());
  // synthesize the root from the top coefficient down and verify
  long half_deg = deg / 2;
  LaurentPoly s = LaurentPoly::v_power(half_val + half_deg, Rational(ln, ld));
  for (long e = half_deg - 1; e >= 0; --e) {
    // coefficient of v^{val + half_deg + e} in p minus current s^2
    LaurentPoly diff = p - s * s;
    if (diff.is_zero()) break;
    long target = p.valuation() + half_deg + e;
    Rational c = diff.coeff(target) / (Rational(2) * Rational(ln, ld));
    s += LaurentPoly::v_power(half_val + e, c);
  }
  if (s * s == p) return s;
  return std::nullopt;
}

std::optional<RatFuncQ> ratfunc_sqrt(const RatFuncQ& x) {
  auto sn = laurent_sqrt(x.num());
  if (!sn) {
    // the unit normalization may hide a square: try -num (v-power sign)
    return std::nullopt;
  }
  auto sd = laurent_sqrt(x.den());
  if (!sd) return std::nullopt;
  return RatFuncQ(*sn, *sd);
}

std::vector<RatFuncQ> linear_roots(const AlphaPoly<RatFuncQ>& f) {
  std::vector<RatFuncQ> roots;
  if (f.degree() < 1) return roots;
  auto consider = [&](const RatFuncQ& r) {
    if (!f.eval(r).is_zero()) return;
    for (const auto& seen : roots)
      if (seen == r) return;
    roots.push_back(r);
  };
  // fast path: classical points -1/k and their mirrors
  for (long k = 1; k <= 24; ++k) {
    consider(RatFuncQ(Rational(-1, k)));
    consider(RatFuncQ(Rational(1, k)));
  }
  if (f.degree() == 1) {
    consider(-f[0] / f[1]);
    return roots;
  }
  if (f.degree() == 2) {
    // complete for quadratics: discriminant square test
    RatFuncQ disc = f[1] * f[1] - RatFuncQ(4) * f[2] * f[0];
    if (auto sq = ratfunc_sqrt(disc)) {
      consider((-f[1] + *sq) / (RatFuncQ(2) * f[2]));
      consider((-f[1] - *sq) / (RatFuncQ(2) * f[2]));
    }
    return roots;
  }
  auto cleared = clear_to_zq(f);
  if (!cleared) return roots;
  // candidates a/b with a | trailing, b | leading (as polynomials in q,
  // including q-power and integer-unit ambiguity)
  const ZPoly* trailing = nullptr;
  for (const auto& c : cleared->coeffs)
    if (!c.empty()) {
      trailing = &c;
      break;
    }
  const ZPoly& leading = cleared->coeffs.back();
  if (!trailing || leading.empty()) return roots;
  long qspan = 0;
  for (const auto& c : cleared->coeffs)
    if (!c.empty()) qspan = std::max<long>(qspan, static_cast<long>(c.size()));
  auto nums = poly_divisor_values(*trailing, qspan);
  auto dens = poly_divisor_values(leading, qspan);
  size_t tested = 0;
  for (const auto& a : nums)
    for (const auto& b : dens) {
      if (++tested > kMaxCandidates) return roots;
      RatFuncQ r = a / b;
      consider(r);
      consider(-r);
      RatFuncQ ri = b / a;
      consider(ri);
      consider(-ri);
    }
  return roots;
}

namespace {

// Try to split a monic squarefree quartic into two monic quadratics over
// Q(q) by eliminating one unknown; roots of the eliminant are searched with
// the same machinery as alpha-roots.
std::optional<std::pair<P, P>> split_quartic(const P& h) {
  const RatFuncQ h3 = h[3], h2 = h[2], h1 = h[1], h0 = h[0];
  // h = (a^2 + b a + c)(a^2 + d a + e), d = h3 - b, c + e = h2 - b d =: S;
  // c (h3 - 2b) = h1 - b S; c e = h0.  Eliminate c:
  // with t = h3 - 2b: c = (h1 - bS) / t, e = S - c, giving
  // (h1 - bS)(S t - (h1 - bS)) - h0 t^2 = 0, a polynomial in b.
  // Build it as an AlphaPoly in the variable b.
  using B = AlphaPoly<RatFuncQ>;
  B b = B::alpha_power(1);
  B S = B(h2) - b * (B(h3) - b);
  B t = B(h3) - b.scaled(RatFuncQ(2));
  B u = B(h1) - b * S;  // c * t
  B elim = u * (S * t - u) - t * t * B(h0);
  if (elim.is_zero()) return std::nullopt;
  for (const RatFuncQ& broot : linear_roots(elim)) {
    RatFuncQ tval = h3 - RatFuncQ(2) * broot;
    if (tval.is_zero()) continue;
    RatFuncQ Sval = h2 - broot * (h3 - broot);
    RatFuncQ cval = (h1 - broot * Sval) / tval;
    RatFuncQ eval_ = Sval - cval;
    P left(std::vector<RatFuncQ>{cval, broot, RatFuncQ(1)});
    P right(std::vector<RatFuncQ>{eval_, h3 - broot, RatFuncQ(1)});
    if (left * right == h) return std::make_pair(left, right);
  }
  return std::nullopt;
}

void split_piece(const P& piece, std::vector<P>& resolved, std::vector<P>& residual) {
  if (piece.degree() <= 0) return;
  if (piece.degree() <= 2) {
    std::vector<RatFuncQ> roots = linear_roots(piece);
    if (piece.degree() == 2 && roots.size() == 2) {
      resolved.push_back(P::alpha_power(1) - P(roots[0]));
      resolved.push_back(P::alpha_power(1) - P(roots[1]));
    } else if (piece.degree() == 1 || (piece.degree() == 2 && roots.empty())) {
      resolved.push_back(piece.monic());
    } else if (piece.degree() == 2 && roots.size() == 1) {
      // squarefree quadratic cannot have a single double root; the root
      // found must split off a linear factor with another linear cofactor
      P lin = P::alpha_power(1) - P(roots[0]);
      resolved.push_back(lin);
      resolved.push_back(piece.monic().div_exact(lin));
    }
    return;
  }
  P rest = piece.monic();
  for (const RatFuncQ& r : linear_roots(rest)) {
    P lin = P::alpha_power(1) - P(r);
    while (lin.divides(rest) && rest.degree() > 0) {
      resolved.push_back(lin);
      rest = rest.div_exact(lin);
    }
  }
  if (rest.degree() <= 2) {
    split_piece(rest, resolved, residual);
    return;
  }
  if (rest.degree() == 4) {
    if (auto quads = split_quartic(rest)) {
      split_piece(quads->first, resolved, residual);
      split_piece(quads->second, resolved, residual);
      return;
    }
  }
  if (rest.degree() > 0) residual.push_back(rest);
}

}  // namespace

AlphaFactorization factor_alpha(const AlphaPoly<RatFuncQ>& f) {
  if (f.is_zero()) throw Error("factor_alpha of zero");
  AlphaFactorization out;
  out.unit = f.leading();
  P monic = f.monic();
  // strip alpha powers
  size_t alpha_val = 0;
  while (alpha_val < monic.coeffs().size() && monic[alpha_val].is_zero()) ++alpha_val;
  if (alpha_val > 0) {
    std::vector<RatFuncQ> shifted(monic.coeffs().begin() + static_cast<long>(alpha_val),
                                  monic.coeffs().end());
    monic = P(std::move(shifted));
    out.factors.emplace_back(P::alpha_power(1), static_cast<int>(alpha_val));
  }
  for (const auto& [part, mult] : yun_squarefree(monic)) {
    std::vector<P> resolved, residual;
    split_piece(part, resolved, residual);
    for (const auto& p : resolved) {
      bool merged = false;
      for (auto& [fp, fe] : out.factors)
        if (fp == p.monic()) {
          fe += mult;
          merged = true;
          break;
        }
      if (!merged) out.factors.emplace_back(p.monic(), mult);
    }
    for (const auto& p : residual) out.residual_parts.emplace_back(p.monic(), mult);
  }
  if (out.expand() != f) throw Error("factorization does not re-expand to the input");
  return out;
}

}  // namespace qdet
