#pragma once

#include <variant>

#include "qdet/combinat.hpp"
#include "qdet/matrix.hpp"

namespace qdet {

enum class Variant { det, per };

inline const char* variant_name(Variant v) { return v == Variant::det ? "det" : "per"; }
inline Variant variant_parse(const std::string& s) {
  if (s == "det") return Variant::det;
  if (s == "per") return Variant::per;
  throw Error("unknown variant: " + s);
}

// x_{r1 c1} x_{r2 c2} ... with 1-based indices; rows pairwise distinct.
struct MonomialFactor {
  uint8_t row, col;
};
using Monomial = std::vector<MonomialFactor>;

// Finitely supported map from normal-basis column tuples to coefficients.
template <class C>
using MonomialVector = std::map<WeightTuple, C>;

template <class C>
void add_term(MonomialVector<C>& v, const WeightTuple& t, const C& c) {
  if (is_zero(c)) return;
  auto it = v.find(t);
  if (it == v.end()) {
    v.emplace(t, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) v.erase(it);
  }
}

// Rewrite a monomial with distinct rows into the normal basis (rows
// increasing) using the quantum matrix relations.  The three adjacent cases
// for x_{ab} x_{cd} with a > c are: b = d gives q^{-1} x_{cb} x_{ab};
// b < d commutes; b > d gives x_{cd} x_{ab} - (q - q^{-1}) x_{cb} x_{ad}.
template <class Ctx>
MonomialVector<typename Ctx::Scalar> normal_order(const Ctx& ctx, const Monomial& mono) {
  using K = typename Ctx::Scalar;
  {
    std::vector<bool> seen(mono.size() + 1, false);
    for (const auto& f : mono) {
      if (f.row == 0 || f.row > mono.size() || seen[f.row])
        throw Error("normal_order: rows must form a permutation");
      seen[f.row] = true;
    }
  }
  MonomialVector<K> out;
  std::vector<std::pair<K, Monomial>> work;
  work.emplace_back(K(1), mono);
  const K qq = ctx.q_pow(1) - ctx.q_pow(-1);
  while (!work.empty()) {
    auto [coeff, m] = std::move(work.back());
    work.pop_back();
    size_t i = 0;
    while (i + 1 < m.size() && m[i].row < m[i + 1].row) ++i;
    if (i + 1 >= m.size()) {
      WeightTuple t(m.size());
      for (size_t p = 0; p < m.size(); ++p) t[p] = m[p].col;
      add_term(out, t, coeff);
      continue;
    }
    const auto [a, b] = m[i];
    const auto [c, d] = m[i + 1];
    if (b == d) {
      m[i] = {c, b};
      m[i + 1] = {a, b};
      work.emplace_back(coeff * ctx.q_pow(-1), std::move(m));
    } else if (b < d) {
      std::swap(m[i], m[i + 1]);
      work.emplace_back(std::move(coeff), std::move(m));
    } else {
      Monomial m2 = m;
      m2[i] = {c, b};
      m2[i + 1] = {a, d};
      std::swap(m[i], m[i + 1]);
      work.emplace_back(-(coeff * qq), std::move(m2));
      work.emplace_back(std::move(coeff), std::move(m));
    }
  }
  return out;
}

// alpha^{n-cyc(w)} prefactors: q^{inv w} for the determinant family,
// (-q)^{-inv w} for the permanent family.
template <class Ctx>
typename Ctx::Scalar variant_prefactor(const Ctx& ctx, Variant variant, size_t inversions) {
  if (variant == Variant::det) return ctx.q_pow(static_cast<long>(inversions));
  typename Ctx::Scalar p = ctx.q_pow(-static_cast<long>(inversions));
  return (inversions % 2 != 0) ? -p : p;
}

// Quantum alpha-determinant (or -permanent) with column tuple j, expanded in
// the normal basis; coefficients are polynomials in alpha.
template <class Ctx>
MonomialVector<AlphaPoly<typename Ctx::Scalar>> expand_D(const Ctx& ctx, const WeightTuple& j,
                                                         Variant variant) {
  using K = typename Ctx::Scalar;
  const size_t n = j.size();
  MonomialVector<AlphaPoly<K>> out;
  for (const Perm& w : all_perms(n)) {
    Monomial mono(n);
    for (size_t p = 0; p < n; ++p) mono[p] = {static_cast<uint8_t>(w[p] + 1), j[p]};
    K pref = variant_prefactor(ctx, variant, perm_inversions(w));
    size_t apow = n - perm_cycles(w);
    for (auto& [t, c] : normal_order(ctx, mono))
      add_term(out, t, AlphaPoly<K>::alpha_power(apow, c * pref));
  }
  return out;
}

// One weight block of the transition data: the matrix uF^lambda(alpha) with
// rows/columns indexed by I_n(lambda) in lexicographic order; column sigma
// holds the normal-basis coordinates of D^{(alpha)}(sigma).
template <class K>
struct UFBlock {
  Weight weight;
  std::vector<WeightTuple> index;
  PolyMatrix<AlphaPoly<K>> mat;
};

// Build uF^lambda via the length recursion for the reordering coefficients
// f^{g s_i} = theta0 f^g + theta1 f^g(. s_i), walking S_n upward in weak
// order from the identity.  This is the fast path; normal_order provides the
// independent route (their agreement is tested).
template <class Ctx>
UFBlock<typename Ctx::Scalar> build_uF(const Ctx& ctx, const Weight& weight, Variant variant) {
  using K = typename Ctx::Scalar;
  const size_t n = weight.size();
  UFBlock<K> block;
  block.weight = weight;
  block.index = weight_tuples(weight);
  const auto& tuples = block.index;
  const size_t nt = tuples.size();
  std::map<WeightTuple, size_t> pos;
  for (size_t i = 0; i < nt; ++i) pos[tuples[i]] = i;

  // Tables: swap index and entry comparison at each adjacent position.
  std::vector<std::vector<size_t>> swap_idx(nt, std::vector<size_t>(n > 0 ? n - 1 : 0));
  std::vector<std::vector<int>> cmp(nt, std::vector<int>(n > 0 ? n - 1 : 0));
  for (size_t s = 0; s < nt; ++s)
    for (size_t i = 0; i + 1 < n; ++i) {
      WeightTuple t = tuples[s];
      std::swap(t[i], t[i + 1]);
      swap_idx[s][i] = pos.at(t);
      cmp[s][i] = tuples[s][i] < tuples[s][i + 1] ? -1 : (tuples[s][i] == tuples[s][i + 1] ? 0 : 1);
    }

  // theta values for the step multiplier q (det) resp. -q^{-1} (per).
  const K theta0_gt = variant == Variant::det ? K(1) - ctx.q_pow(2) : K(1) - ctx.q_pow(-2);
  const K theta1_eq = variant == Variant::det ? K(1) : -ctx.q_pow(-2);
  const K theta1_ne = variant == Variant::det ? ctx.q_pow(1) : -ctx.q_pow(-1);

  // Accumulators per alpha power; entry (tau, sigma).
  std::vector<std::vector<std::vector<K>>> acc(
      n, std::vector<std::vector<K>>(nt, std::vector<K>(nt, K(0))));

  // Sparse columns of f^g: col[sigma] maps tau -> coefficient.
  using Cols = std::vector<std::map<size_t, K>>;
  std::map<Perm, Cols> level;
  Cols ident(nt);
  for (size_t s = 0; s < nt; ++s) ident[s][s] = K(1);
  level.emplace(perm_identity(n), std::move(ident));

  while (!level.empty()) {
    for (const auto& [g, cols] : level) {
      size_t apow = n - perm_cycles(g);
      for (size_t s = 0; s < nt; ++s)
        for (const auto& [t, c] : cols[s]) acc[apow][t][s] += c;
    }
    std::map<Perm, Cols> next;
    for (const auto& [g, cols] : level) {
      for (size_t i = 0; i + 1 < n; ++i) {
        if (g[i] >= g[i + 1]) continue;  // need length to increase
        Perm gs = g;
        std::swap(gs[i], gs[i + 1]);
        if (next.count(gs)) continue;
        Cols ncols(nt);
        for (size_t s = 0; s < nt; ++s) {
          const K& th1 = cmp[s][i] == 0 ? theta1_eq : theta1_ne;
          for (const auto& [t, c] : cols[swap_idx[s][i]]) {
            K& slot = ncols[s][t];
            slot += th1 * c;
            if (is_zero(slot)) ncols[s].erase(t);
          }
          if (cmp[s][i] == 1) {
            for (const auto& [t, c] : cols[s]) {
              K& slot = ncols[s][t];
              slot += theta0_gt * c;
              if (is_zero(slot)) ncols[s].erase(t);
            }
          }
        }
        next.emplace(std::move(gs), std::move(ncols));
      }
    }
    level = std::move(next);
  }

  block.mat = PolyMatrix<AlphaPoly<K>>(nt, nt);
  for (size_t t = 0; t < nt; ++t)
    for (size_t s = 0; s < nt; ++s) {
      std::vector<K> coeffs(n);
      for (size_t e = 0; e < n; ++e) coeffs[e] = acc[e][t][s];
      block.mat.at(t, s) = AlphaPoly<K>(std::move(coeffs));
    }
  return block;
}

// U_q generators acting on normal-basis vectors (coefficients C are scalars
// or alpha-polynomials).  IntegralWeight entries are doubled to allow the
// half-integer weights appearing in coproduct factors.
struct GenE {
  int k;  // 1-based, 1..n-1
};
struct GenF {
  int k;
};
struct IntegralWeight {
  std::vector<int> doubled;  // 2 * coefficient of eps_i
  static IntegralWeight eps(size_t i, size_t n) {
    IntegralWeight w;
    w.doubled.assign(n, 0);
    w.doubled[i - 1] = 2;
    return w;
  }
};
using Generator = std::variant<GenE, GenF, IntegralWeight>;

namespace detail {
template <class C, class K>
C scale_coeff(const C& c, const K& k) {
  if constexpr (std::is_same_v<C, K>) {
    return c * k;
  } else {
    return c.scaled(k);
  }
}

// v-exponent of q_k^l(t): <(eps_k - eps_{k+1})/2, sum_{p<l} eps_{t_p} -
// sum_{p>l} eps_{t_p}> doubled.
inline long qkl_vexp(const WeightTuple& t, int k, size_t l) {
  long s = 0;
  for (size_t p = 0; p < t.size(); ++p) {
    if (p == l) continue;
    int d = t[p] == k ? 1 : (t[p] == k + 1 ? -1 : 0);
    s += p < l ? d : -d;
  }
  return s;
}
}  // namespace detail

template <class Ctx, class C>
MonomialVector<C> apply_generator(const Ctx& ctx, const Generator& gen,
                                  const MonomialVector<C>& vec) {
  MonomialVector<C> out;
  for (const auto& [t, c] : vec) {
    const size_t n = t.size();
    if (const GenE* e = std::get_if<GenE>(&gen)) {
      if (e->k < 1 || e->k >= static_cast<int>(n)) throw Error("generator index out of range");
      for (size_t l = 0; l < n; ++l) {
        if (t[l] != e->k + 1) continue;
        WeightTuple nt = t;
        nt[l] = static_cast<uint8_t>(e->k);
        add_term(out, nt, detail::scale_coeff(c, ctx.v_pow(detail::qkl_vexp(t, e->k, l))));
      }
    } else if (const GenF* f = std::get_if<GenF>(&gen)) {
      if (f->k < 1 || f->k >= static_cast<int>(n)) throw Error("generator index out of range");
      for (size_t l = 0; l < n; ++l) {
        if (t[l] != f->k) continue;
        WeightTuple nt = t;
        nt[l] = static_cast<uint8_t>(f->k + 1);
        add_term(out, nt, detail::scale_coeff(c, ctx.v_pow(detail::qkl_vexp(t, f->k, l))));
      }
    } else {
      const IntegralWeight& mu = std::get<IntegralWeight>(gen);
      long vexp = 0;
      for (auto x : t) vexp += mu.doubled.at(static_cast<size_t>(x - 1));
      add_term(out, t, detail::scale_coeff(c, ctx.v_pow(vexp)));
    }
  }
  return out;
}

}  // namespace qdet
