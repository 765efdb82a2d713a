#pragma once

#include "qdet/qmatalg.hpp"

namespace qdet {

// Iwahori-Hecke algebra element in the h_w basis.
template <class K>
using HeckeElement = std::map<Perm, K>;

template <class K>
void hecke_add_term(HeckeElement<K>& e, const Perm& w, const K& c) {
  if (is_zero(c)) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) e.erase(it);
  }
}

template <class K>
HeckeElement<K> hecke_unit(size_t n) {
  return {{perm_identity(n), K(1)}};
}

template <class K>
HeckeElement<K> hecke_gen(size_t n, size_t i) {
  Perm s = perm_identity(n);
  std::swap(s[i], s[i + 1]);
  return {{std::move(s), K(1)}};
}

// Right multiplication by h_i: h_w h_i = h_{w s_i} when the length goes up,
// otherwise h_{w s_i} - (q - q^{-1}) h_w.
template <class Ctx>
HeckeElement<typename Ctx::Scalar> hecke_right_gen(const Ctx& ctx,
                                                   const HeckeElement<typename Ctx::Scalar>& e,
                                                   size_t i) {
  using K = typename Ctx::Scalar;
  const K qq = ctx.q_pow(1) - ctx.q_pow(-1);
  HeckeElement<K> out;
  for (const auto& [w, c] : e) {
    Perm ws = w;
    std::swap(ws[i], ws[i + 1]);
    if (w[i] < w[i + 1]) {
      hecke_add_term(out, ws, c);
    } else {
      hecke_add_term(out, ws, c);
      hecke_add_term(out, w, -(c * qq));
    }
  }
  return out;
}

// h_i^{-1} = h_i + (q - q^{-1}).
template <class Ctx>
HeckeElement<typename Ctx::Scalar> hecke_gen_inverse(const Ctx& ctx, size_t n, size_t i) {
  using K = typename Ctx::Scalar;
  HeckeElement<K> e = hecke_gen<K>(n, i);
  hecke_add_term(e, perm_identity(n), ctx.q_pow(1) - ctx.q_pow(-1));
  return e;
}

template <class Ctx>
HeckeElement<typename Ctx::Scalar> hecke_mul(const Ctx& ctx,
                                             const HeckeElement<typename Ctx::Scalar>& a,
                                             const HeckeElement<typename Ctx::Scalar>& b) {
  using K = typename Ctx::Scalar;
  HeckeElement<K> out;
  for (const auto& [u, cu] : b) {
    HeckeElement<K> cur = a;
    for (int i : perm_reduced_word(u)) cur = hecke_right_gen(ctx, cur, static_cast<size_t>(i));
    for (const auto& [w, cw] : cur) hecke_add_term(out, w, cw * cu);
  }
  return out;
}

// e_+(lambda) = sum over the row group S_lambda of q^{-inv w} h_w;
// e_-(lambda) = sum over the column group S_{lambda'} of (-q)^{inv w} h_w.
template <class Ctx>
HeckeElement<typename Ctx::Scalar> e_plus(const Ctx& ctx, const Partition& shape, size_t n) {
  using K = typename Ctx::Scalar;
  HeckeElement<K> out;
  for (const Perm& w : young_subgroup(shape.parts, n))
    hecke_add_term(out, w, ctx.q_pow(-static_cast<long>(perm_inversions(w))));
  return out;
}

template <class Ctx>
HeckeElement<typename Ctx::Scalar> e_minus(const Ctx& ctx, const Partition& shape, size_t n) {
  using K = typename Ctx::Scalar;
  HeckeElement<K> out;
  for (const Perm& w : young_subgroup(shape.conjugate().parts, n)) {
    size_t inv = perm_inversions(w);
    K c = ctx.q_pow(static_cast<long>(inv));
    hecke_add_term(out, w, inv % 2 != 0 ? -c : c);
  }
  return out;
}

struct UnsupportedSymmetrizer : Error {
  explicit UnsupportedSymmetrizer(const std::string& what)
      : Error("unsupported symmetrizer: " + what) {}
};

inline bool symmetrizer_supported(const StandardTableau& t) {
  return t.shape.rows() <= 1 || t.shape.first() <= 1 || t.shape.size() <= 3;
}

// q-Young symmetrizer y(T) for single-row and single-column tableaux of any
// size and for all 3-box tableaux (built from conjugated e_+/e_- products and
// validated against the explicitly known elements).
template <class Ctx>
HeckeElement<typename Ctx::Scalar> young_symmetrizer(const Ctx& ctx, const StandardTableau& t) {
  const size_t n = static_cast<size_t>(t.shape.size());
  if (t.shape.rows() <= 1) return e_plus(ctx, t.shape, n);
  if (t.shape.first() <= 1) return e_minus(ctx, t.shape, n);
  if (n == 3) {
    // shape (2,1): two tableaux distinguished by the tuple of row indices.
    WeightTuple j = tableau_tuple(t);
    auto em = e_minus(ctx, t.shape, n);
    auto ep = e_plus(ctx, t.shape, n);
    auto h2 = hecke_gen<typename Ctx::Scalar>(n, 1);
    auto h2inv = hecke_gen_inverse(ctx, n, 1);
    if (j == WeightTuple{1, 1, 2})
      return hecke_mul(ctx, hecke_mul(ctx, hecke_mul(ctx, h2, em), h2inv), ep);
    if (j == WeightTuple{1, 2, 1})
      return hecke_mul(ctx, hecke_mul(ctx, hecke_mul(ctx, em, h2), ep), h2inv);
  }
  throw UnsupportedSymmetrizer(t.shape.str() + " tableau " + t.str());
}

// Right action of h_k on the free module spanned by all column tuples:
// swap when increasing, q^{-1} fix when equal, swap minus (q-q^{-1}) when
// decreasing.  This is both the Hecke action on weight spaces and the
// alpha-independent action defining the Q_T coefficients.
template <class Ctx, class C>
MonomialVector<C> pi_gen(const Ctx& ctx, const MonomialVector<C>& vec, size_t k) {
  using K = typename Ctx::Scalar;
  const K qq = ctx.q_pow(1) - ctx.q_pow(-1);
  MonomialVector<C> out;
  for (const auto& [t, c] : vec) {
    if (k + 1 >= t.size()) throw Error("pi_gen: index out of range");
    if (t[k] < t[k + 1]) {
      WeightTuple s = t;
      std::swap(s[k], s[k + 1]);
      add_term(out, s, c);
    } else if (t[k] == t[k + 1]) {
      add_term(out, t, detail::scale_coeff(c, ctx.q_pow(-1)));
    } else {
      WeightTuple s = t;
      std::swap(s[k], s[k + 1]);
      add_term(out, s, c);
      add_term(out, t, detail::scale_coeff(c, -qq));
    }
  }
  return out;
}

template <class Ctx, class C>
MonomialVector<C> pi_free_action(const Ctx& ctx, const MonomialVector<C>& vec,
                                 const HeckeElement<typename Ctx::Scalar>& h) {
  MonomialVector<C> out;
  for (const auto& [w, coeff] : h) {
    MonomialVector<C> cur = vec;
    for (int i : perm_reduced_word(w)) cur = pi_gen(ctx, cur, static_cast<size_t>(i));
    for (const auto& [t, c] : cur) add_term(out, t, detail::scale_coeff(c, coeff));
  }
  return out;
}

// Highest weight vector data for a standard tableau: the alpha-independent
// coefficients Q_T^sigma and the vector sum_sigma Q_T^sigma D^(alpha)(sigma).
template <class K>
struct HwvVector {
  MonomialVector<K> Q;
  MonomialVector<AlphaPoly<K>> v;
};

template <class Ctx>
HwvVector<typename Ctx::Scalar> hwv_vector(const Ctx& ctx, const StandardTableau& t,
                                           Variant variant) {
  using K = typename Ctx::Scalar;
  HwvVector<K> out;
  WeightTuple j = tableau_tuple(t);
  MonomialVector<K> basis{{j, K(1)}};
  out.Q = pi_free_action(ctx, basis, young_symmetrizer(ctx, t));
  for (const auto& [sigma, qc] : out.Q) {
    for (const auto& [tau, poly] : expand_D(ctx, sigma, variant))
      add_term(out.v, tau, poly.scaled(qc));
  }
  return out;
}

// Matrix of Q_T^sigma coefficients, rows over STab(lambda), columns over
// I_n(lambda); generically of full row rank f^lambda.
template <class Ctx>
PolyMatrix<typename Ctx::Scalar> qtilde_matrix(const Ctx& ctx, const Partition& shape) {
  using K = typename Ctx::Scalar;
  auto tabs = standard_tableaux(shape);
  auto tuples = weight_tuples(weight_of_partition(shape, static_cast<size_t>(shape.size())));
  std::map<WeightTuple, size_t> pos;
  for (size_t i = 0; i < tuples.size(); ++i) pos[tuples[i]] = i;
  PolyMatrix<K> m(tabs.size(), tuples.size(), K(0));
  for (size_t r = 0; r < tabs.size(); ++r) {
    MonomialVector<K> basis{{tableau_tuple(tabs[r]), K(1)}};
    auto q = pi_free_action(ctx, basis, young_symmetrizer(ctx, tabs[r]));
    for (const auto& [t, c] : q) m.at(r, pos.at(t)) = c;
  }
  return m;
}

}  // namespace qdet
