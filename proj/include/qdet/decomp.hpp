#pragma once

#include <chrono>
#include <functional>
#include <sstream>

#include "qdet/cache.hpp"
#include "qdet/hecke.hpp"
#include "qdet/parallel.hpp"
#include "qdet/point.hpp"

namespace qdet {

namespace detail {

// Coefficients (ascending) of the unique polynomial of degree < n through
// the nodes; exact Newton divided differences.
std::vector<Rational> newton_interpolate(const std::vector<Rational>& xs,
                                         std::vector<Rational> ys);

}  // namespace detail

template <class K>
struct DiscriminantSet {
  int n = 0;
  Variant variant = Variant::det;
  std::vector<Partition> order;
  std::vector<AlphaPoly<K>> uC;  // by order index
  std::vector<AlphaPoly<K>> C;
  AlphaPoly<K> uC_total;
};

template <class K>
struct TransitionResult {
  std::vector<StandardTableau> tableaux;
  PolyMatrix<AlphaPoly<K>> F;  // row T, column S: v_T = sum_S F[T][S] v0_S
  std::vector<AlphaPoly<K>> divisors;
  AlphaPoly<K> detF;
};

// Computation engine: memoizes weight blocks, discriminants and ranks, runs
// the expensive determinants in parallel, and enforces the optional time
// budget.  One engine per coefficient context (symbolic or specialized q).
template <class Ctx>
class Engine {
 public:
  using K = typename Ctx::Scalar;
  using Point = AlgebraicPoint<K>;
  using Poly = AlphaPoly<K>;

  explicit Engine(Ctx c) : ctx(std::move(c)), start_(std::chrono::steady_clock::now()) {}

  Ctx ctx;
  int threads = default_thread_count();
  std::optional<double> budget_seconds;
  Cache* cache = nullptr;
  std::function<void(const std::string&)> progress;

  void note(const std::string& msg) const {
    if (progress) progress(msg);
  }

  void checkpoint(const std::string& where) const {
    if (!budget_seconds) return;
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > *budget_seconds)
      throw BudgetExceeded("time budget of " + std::to_string(*budget_seconds) +
                           "s exceeded during " + where +
                           (cache ? "; partial results cached under " + cache->dir().string()
                                  : "; no cache directory configured"));
  }

  const KostkaTable& kostka(int n) {
    auto it = kostka_.find(n);
    if (it == kostka_.end()) it = kostka_.emplace(n, kostka_table(n)).first;
    return it->second;
  }

  static std::string weight_key(const Weight& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    return os.str();
  }

  std::string point_key(const Point& pt) const {
    if (pt.is_value()) return "value:" + to_json(Poly(*pt.value)).dump();
    return "root:" + to_json(*pt.modulus).dump();
  }

  const UFBlock<K>& uf_block(const Weight& w, Variant variant) {
    std::string key = std::string(variant_name(variant)) + "|" + weight_key(w);
    auto it = uf_memo_.find(key);
    if (it == uf_memo_.end()) {
      checkpoint("uF block " + key);
      it = uf_memo_.emplace(key, build_uF(ctx, w, variant)).first;
    }
    return it->second;
  }

  // det uF^lambda(alpha).  Blocks up to 8x8 go through fraction-free Bareiss
  // directly; larger symbolic blocks are evaluated at enough rational q
  // values and reassembled by exact interpolation (identical result, with a
  // two-point verification on top of the degree-bound argument).
  const Poly& uC(const Partition& lambda, Variant variant) {
    std::string key = "uC|" + ctx.mode() + "|" + variant_name(variant) + "|" + lambda.str();
    auto it = det_memo_.find(key);
    if (it != det_memo_.end()) return it->second;
    if (cache) {
      if (auto j = cache->load(key)) {
        Poly p = alpha_from_json<K>(*j);
        return det_memo_.emplace(key, std::move(p)).first->second;
      }
    }
    note("computing uC for shape (" + lambda.str() + "), variant " +
         variant_name(variant));
    const auto& block = uf_block(weight_of_partition(lambda, static_cast<size_t>(lambda.size())),
                                 variant);
    Poly det = block_det(block.mat, key);
    if (cache) cache->store(key, to_json(det));
    return det_memo_.emplace(key, std::move(det)).first->second;
  }

  // q-content discriminant via the inverse-Kostka exponents
  // C^lambda = prod_mu uC^mu ^ {K^{-1}(lambda,mu)}; all divisions must be
  // exact or the factorization lemma itself would be falsified.
  const Poly& C(const Partition& lambda, Variant variant) {
    std::string key = "C|" + ctx.mode() + "|" + variant_name(variant) + "|" + lambda.str();
    auto it = det_memo_.find(key);
    if (it != det_memo_.end()) return it->second;
    int n = lambda.size();
    const KostkaTable& kt = kostka(n);
    size_t li = kt.index(lambda);
    Poly num(K(1)), den(K(1));
    for (size_t mi = 0; mi < kt.order.size(); ++mi) {
      long e = kt.inverse[li][mi].get_si();
      if (e > 0) num *= uC(kt.order[mi], variant).pow(e);
      if (e < 0) den *= uC(kt.order[mi], variant).pow(-e);
    }
    auto [quot, rem] = num.divmod(den);
    if (!rem.is_zero())
      throw Error("inexact division in the Kostka factorization for shape " + lambda.str());
    if (!is_one(quot.constant_term()))
      throw Error("q-content discriminant is not normalized at alpha=0 for shape " +
                  lambda.str());
    return det_memo_.emplace(key, std::move(quot)).first->second;
  }

  DiscriminantSet<K> discriminants(int n, Variant variant) {
    DiscriminantSet<K> out;
    out.n = n;
    out.variant = variant;
    out.order = partitions_of(n);
    out.uC.reserve(out.order.size());
    out.C.reserve(out.order.size());
    for (const auto& lam : out.order) {
      out.uC.push_back(uC(lam, variant));
      out.C.push_back(C(lam, variant));
    }
    // Cross-check the factorization chain uC^mu = prod C^lambda^{K(lambda,mu)}.
    const KostkaTable& kt = kostka(n);
    for (size_t mi = 0; mi < kt.order.size(); ++mi) {
      Poly prod(K(1));
      for (size_t li = 0; li < kt.order.size(); ++li) {
        long e = kt.kostka[li][mi].get_si();
        if (e > 0) prod *= out.C[li].pow(e);
      }
      if (prod != out.uC[mi])
        throw Error("Kostka factorization cross-check failed for shape " + kt.order[mi].str());
    }
    // Full-space determinant: product over all weights, reduced to dominants.
    out.uC_total = Poly(K(1));
    for (const Weight& w : all_weights(n)) out.uC_total *= uC(dominant_of(w), variant);
    return out;
  }

  TransitionResult<K> transition_F(const Partition& lambda, Variant variant) {
    const size_t n = static_cast<size_t>(lambda.size());
    auto tabs = standard_tableaux(lambda);
    for (const auto& t : tabs)
      if (!symmetrizer_supported(t))
        throw UnsupportedSymmetrizer(
            "shape " + lambda.str() +
            "; determinant-level data is still available through the Kostka route");
    const auto& block = uf_block(weight_of_partition(lambda, n), variant);
    const size_t nt = block.index.size();
    const size_t f = tabs.size();
    PolyMatrix<K> qt = qtilde_matrix(ctx, lambda);
    if (gauss_rank_of(qt) != f)
      throw Error("Q-matrix is rank deficient for shape " + lambda.str());

    // Pick f independent rows of Qt^T by elimination over K.
    std::vector<size_t> pivot_rows = independent_rows(qt);
    PolyMatrix<K> sub(f, f);
    for (size_t a = 0; a < f; ++a)
      for (size_t b = 0; b < f; ++b) sub.at(a, b) = qt.at(b, pivot_rows[a]);
    PolyMatrix<K> sub_inv = field_inverse(sub);

    TransitionResult<K> out;
    out.tableaux = tabs;
    out.F = PolyMatrix<Poly>(f, f);
    for (size_t ti = 0; ti < f; ++ti) {
      // coordinates of v^(alpha)_T in the normal basis: uF * Q_T
      std::vector<Poly> coords(nt);
      for (size_t r = 0; r < nt; ++r) {
        Poly acc;
        for (size_t s = 0; s < nt; ++s) {
          const K& qs = qt.at(ti, s);
          if (is_zero(qs)) continue;
          acc += block.mat.at(r, s).scaled(qs);
        }
        coords[r] = std::move(acc);
      }
      for (size_t si = 0; si < f; ++si) {
        Poly acc;
        for (size_t b = 0; b < f; ++b) acc += coords[pivot_rows[b]].scaled(sub_inv.at(si, b));
        out.F.at(ti, si) = std::move(acc);
      }
      // All nt equations must hold, not only the pivot rows.
      for (size_t r = 0; r < nt; ++r) {
        Poly acc;
        for (size_t si = 0; si < f; ++si) acc += out.F.at(ti, si).scaled(qt.at(si, r));
        if (acc != coords[r]) throw Error("transition solve inconsistent for " + lambda.str());
      }
    }
    out.detF = bareiss_det(out.F);
    if (out.detF.monic() != C(lambda, variant).monic())
      throw Error("det F disagrees with the Kostka-route discriminant for " + lambda.str());
    out.divisors = smith_normal_form(out.F);
    return out;
  }

  size_t rank_uf_at(const Partition& mu, const Point& pt, Variant variant) {
    std::string key = std::string(variant_name(variant)) + "|" + mu.str() + "|" + point_key(pt);
    auto it = rank_memo_.find(key);
    if (it != rank_memo_.end()) return it->second;
    checkpoint("rank of uF block " + mu.str());
    const auto& block = uf_block(weight_of_partition(mu, static_cast<size_t>(mu.size())), variant);
    size_t r = rank_at_point(block.mat, pt);
    rank_memo_.emplace(key, r);
    return r;
  }

  // Multiplicity of the lambda-isotypic component at a point, computed by
  // two independent routes (inverse-Kostka rank combination and the highest
  // weight vector kernel) which must agree; the coarse rank bounds are
  // checked as well.
  int multiplicity(const Partition& lambda, const Point& pt, Variant variant) {
    std::string key =
        std::string(variant_name(variant)) + "|" + lambda.str() + "|" + point_key(pt);
    auto it = mult_memo_.find(key);
    if (it != mult_memo_.end()) return it->second;
    int n = lambda.size();
    const KostkaTable& kt = kostka(n);
    size_t li = kt.index(lambda);
    long by_kostka = 0;
    for (size_t mi = 0; mi < kt.order.size(); ++mi) {
      long e = kt.inverse[li][mi].get_si();
      if (e != 0) by_kostka += e * static_cast<long>(rank_uf_at(kt.order[mi], pt, variant));
    }
    int by_kernel = hwv_kernel_dim(lambda, pt, variant);
    if (by_kostka != by_kernel)
      throw Error("multiplicity methods disagree for shape " + lambda.str() + " at " +
                  pt.describe() + ": " + std::to_string(by_kostka) + " vs " +
                  std::to_string(by_kernel));
    long f = hook_length_count(lambda);
    long rank_block = static_cast<long>(
        rank_uf_at(lambda, pt, variant));
    long block_dim = static_cast<long>(
        uf_block(weight_of_partition(lambda, static_cast<size_t>(n)), variant).index.size());
    if (by_kostka < std::max(0L, f + rank_block - block_dim) ||
        by_kostka > std::min(f, rank_block))
      throw Error("multiplicity bounds violated for shape " + lambda.str());
    if (by_kostka < 0 || by_kostka > f) throw Error("multiplicity out of range");
    // Third route where the symmetrizers exist: m = rank(Qt * uF(pt)).
    bool supported = true;
    for (const auto& t : standard_tableaux(lambda))
      if (!symmetrizer_supported(t)) supported = false;
    if (supported) {
      long by_qt = static_cast<long>(qt_rank(lambda, pt, variant));
      if (by_qt != by_kostka)
        throw Error("Q-matrix route disagrees for shape " + lambda.str());
    }
    mult_memo_.emplace(key, static_cast<int>(by_kostka));
    return static_cast<int>(by_kostka);
  }

  // dim of highest weight vectors at the point: rank U - rank EU where U is
  // the evaluated weight block and E stacks the raising-operator matrices.
  int hwv_kernel_dim(const Partition& lambda, const Point& pt, Variant variant) {
    const size_t n = static_cast<size_t>(lambda.size());
    Weight w = weight_of_partition(lambda, n);
    const auto& block = uf_block(w, variant);
    const size_t nt = block.index.size();
    // raising maps on monomial weight spaces
    std::vector<PolyMatrix<K>> raise;
    for (size_t k = 1; k < n; ++k) {
      Weight target = w;
      target[k - 1] += 1;
      target[k] -= 1;
      if (target[k] < 0) continue;
      auto ttuples = weight_tuples(target);
      std::map<WeightTuple, size_t> tpos;
      for (size_t i = 0; i < ttuples.size(); ++i) tpos[ttuples[i]] = i;
      PolyMatrix<K> ek(ttuples.size(), nt, K(0));
      for (size_t s = 0; s < nt; ++s) {
        MonomialVector<K> basis{{block.index[s], K(1)}};
        for (const auto& [t, c] : apply_generator(ctx, Generator(GenE{static_cast<int>(k)}), basis))
          ek.at(tpos.at(t), s) += c;
      }
      raise.push_back(std::move(ek));
    }
    if (pt.is_value()) {
      PolyMatrix<K> u(nt, nt);
      for (size_t i = 0; i < nt; ++i)
        for (size_t j = 0; j < nt; ++j) u.at(i, j) = block.mat.at(i, j).eval(*pt.value);
      size_t rank_u = gauss_rank_of(u);
      size_t total_rows = 0;
      for (const auto& e : raise) total_rows += e.rows();
      PolyMatrix<K> eu(total_rows, nt, K(0));
      size_t off = 0;
      for (const auto& e : raise) {
        PolyMatrix<K> prod = e * u;
        for (size_t i = 0; i < prod.rows(); ++i)
          for (size_t j = 0; j < nt; ++j) eu.at(off + i, j) = prod.at(i, j);
        off += e.rows();
      }
      return static_cast<int>(rank_u - gauss_rank_of(eu));
    }
    // quotient-ring point
    auto u = substitute_root(block.mat, *pt.modulus);
    size_t rank_u = gauss_rank(u);
    std::vector<std::vector<QuotientElem<K>>> eu;
    for (const auto& e : raise)
      for (size_t i = 0; i < e.rows(); ++i) {
        std::vector<QuotientElem<K>> row(nt);
        for (size_t j = 0; j < nt; ++j) {
          QuotientElem<K> acc;
          for (size_t s = 0; s < nt; ++s) {
            if (is_zero(e.at(i, s))) continue;
            acc += QuotientElem<K>(e.at(i, s)) * u[s][j];
          }
          row[j] = std::move(acc);
        }
        eu.push_back(std::move(row));
      }
    return static_cast<int>(rank_u - gauss_rank(eu));
  }

  std::vector<Partition> singular_weights(const Point& pt, int n, Variant variant) {
    std::vector<Partition> out;
    for (const auto& lam : partitions_of(n)) {
      int m = multiplicity(lam, pt, variant);
      long f = hook_length_count(lam);
      if (m < f) out.push_back(lam);
      assert_vanishing_bounds(lam, pt, variant, m);
    }
    return out;
  }

 private:
  // At the classical points -1/k the pigeonhole bound and the (n-1,1)
  // estimate are hard consequences; check them whenever they apply.
  void assert_vanishing_bounds(const Partition& lam, const Point& pt, Variant variant, int m) {
    if (variant != Variant::det || !pt.is_value()) return;
    std::optional<long> k = classical_k(*pt.value);
    if (!k) return;
    int n = lam.size();
    // lambda_1/(1+n) > 1 - 1/(1+k)  <=>  k(n - lambda_1 + 1) < lambda_1
    if (*k * (n - lam.first() + 1) < lam.first() && m != 0)
      throw Error("pigeonhole vanishing violated at -1/" + std::to_string(*k));
    if (lam.rows() == 2 && lam.parts[1] == 1 && lam.first() == n - 1) {
      long bound = std::max(2 * *k + 2 - n, 0L);
      if (m > bound) throw Error("(n-1,1) multiplicity bound violated");
    }
  }

  static std::optional<long> classical_k(const K& value);

  size_t qt_rank(const Partition& lambda, const Point& pt, Variant variant) {
    const auto& block =
        uf_block(weight_of_partition(lambda, static_cast<size_t>(lambda.size())), variant);
    PolyMatrix<K> qt = qtilde_matrix(ctx, lambda);
    const size_t nt = block.index.size();
    if (pt.is_value()) {
      std::vector<std::vector<K>> prod(qt.rows(), std::vector<K>(nt, K(0)));
      for (size_t i = 0; i < qt.rows(); ++i)
        for (size_t j = 0; j < nt; ++j) {
          K acc(0);
          for (size_t s = 0; s < nt; ++s) {
            if (is_zero(qt.at(i, s))) continue;
            acc += qt.at(i, s) * block.mat.at(s, j).eval(*pt.value);
          }
          prod[i][j] = std::move(acc);
        }
      return gauss_rank(prod);
    }
    auto u = substitute_root(block.mat, *pt.modulus);
    std::vector<std::vector<QuotientElem<K>>> prod(qt.rows(),
                                                   std::vector<QuotientElem<K>>(nt));
    for (size_t i = 0; i < qt.rows(); ++i)
      for (size_t j = 0; j < nt; ++j) {
        QuotientElem<K> acc;
        for (size_t s = 0; s < nt; ++s) {
          if (is_zero(qt.at(i, s))) continue;
          acc += QuotientElem<K>(qt.at(i, s)) * u[s][j];
        }
        prod[i][j] = std::move(acc);
      }
    return gauss_rank(prod);
  }

  static size_t gauss_rank_of(const PolyMatrix<K>& m) {
    std::vector<std::vector<K>> rows(m.rows(), std::vector<K>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return gauss_rank(std::move(rows));
  }

  static std::vector<size_t> independent_rows(const PolyMatrix<K>& qt) {
    // Columns of qt (indexed by tuples) viewed as rows of Qt^T; eliminate to
    // find a full-rank square subset.
    const size_t f = qt.rows(), nt = qt.cols();
    std::vector<std::vector<K>> m(nt, std::vector<K>(f));
    for (size_t r = 0; r < nt; ++r)
      for (size_t c = 0; c < f; ++c) m[r][c] = qt.at(c, r);
    std::vector<size_t> chosen;
    std::vector<std::vector<K>> basis;  // eliminated rows
    std::vector<size_t> pivot_col;
    for (size_t r = 0; r < nt && chosen.size() < f; ++r) {
      std::vector<K> row = m[r];
      for (size_t b = 0; b < basis.size(); ++b) {
        const K& x = row[pivot_col[b]];
        if (is_zero(x)) continue;
        K factor = x;
        for (size_t c = 0; c < f; ++c) row[c] = row[c] - factor * basis[b][c];
      }
      size_t pc = f;
      for (size_t c = 0; c < f; ++c)
        if (!is_zero(row[c])) {
          pc = c;
          break;
        }
      if (pc == f) continue;
      K inv = field_inv(row[pc]);
      for (size_t c = 0; c < f; ++c) row[c] = row[c] * inv;
      basis.push_back(std::move(row));
      pivot_col.push_back(pc);
      chosen.push_back(r);
    }
    if (chosen.size() != f) throw Error("Q-matrix rows are dependent");
    return chosen;
  }

  Poly block_det(const PolyMatrix<Poly>& m, const std::string& what);

  std::map<int, KostkaTable> kostka_;
  std::map<std::string, UFBlock<K>> uf_memo_;
  std::map<std::string, Poly> det_memo_;
  std::map<std::string, size_t> rank_memo_;
  std::map<std::string, int> mult_memo_;
  std::chrono::steady_clock::time_point start_;
};

template <>
inline std::optional<long> Engine<SymbolicQ>::classical_k(const RatFuncQ& value) {
  if (!value.is_polynomial() || !value.num().is_monomial()) return std::nullopt;
  if (value.num().is_zero() || value.num().valuation() != 0) return std::nullopt;
  Rational r = value.num().trailing_coeff();
  if (sgn(r) >= 0 || r.get_num() != -1) return std::nullopt;
  return r.get_den().get_si();
}

template <>
inline std::optional<long> Engine<NumericQ>::classical_k(const Rational& value) {
  if (sgn(value) >= 0 || value.get_num() != -1) return std::nullopt;
  return value.get_den().get_si();
}

// Direct fraction-free determinant for small blocks; exact q-interpolation
// for large symbolic ones (the entry degree bounds certify the node count).
template <>
inline AlphaPoly<Rational> Engine<NumericQ>::block_det(const PolyMatrix<Poly>& m,
                                                       const std::string&) {
  return bareiss_det(m);
}

template <>
inline AlphaPoly<RatFuncQ> Engine<SymbolicQ>::block_det(const PolyMatrix<Poly>& m,
                                                        const std::string& what) {
  if (m.rows() <= 8) return bareiss_det(m);
  const size_t n = m.rows();
  long vhi_total = 0, vlo_total = 0, adeg_total = 0;
  for (size_t j = 0; j < n; ++j) {
    std::optional<long> vhi, vlo;
    long adeg = 0;
    for (size_t i = 0; i < n; ++i) {
      const Poly& e = m.at(i, j);
      if (e.is_zero()) continue;
      adeg = std::max(adeg, e.degree());
      for (const auto& c : e.coeffs()) {
        if (c.is_zero()) continue;
        if (!c.is_polynomial())
          throw Error("interpolated determinant expects polynomial entries");
        if (!c.num().even_only()) throw Error("entries must be even in v");
        vhi = vhi ? std::max(*vhi, c.num().degree()) : c.num().degree();
        vlo = vlo ? std::min(*vlo, c.num().valuation()) : c.num().valuation();
      }
    }
    if (!vhi) return Poly();  // zero column
    vhi_total += *vhi;
    vlo_total += *vlo;
    adeg_total += adeg;
  }
  const long qlo = vlo_total / 2, qhi = vhi_total / 2;
  const size_t npoints = static_cast<size_t>(qhi - qlo) + 1;
  note("interpolated determinant (" + std::to_string(n) + "x" + std::to_string(n) + ", " +
       std::to_string(npoints) + " sample points) for " + what);

  auto eval_matrix = [&](const Rational& q0) {
    PolyMatrix<AlphaPoly<Rational>> mq(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        std::vector<Rational> c;
        c.reserve(m.at(i, j).coeffs().size());
        for (const auto& x : m.at(i, j).coeffs()) c.push_back(x.num().eval_q(q0));
        mq.at(i, j) = AlphaPoly<Rational>(std::move(c));
      }
    return mq;
  };

  std::vector<Rational> xs(npoints);
  for (size_t i = 0; i < npoints; ++i) xs[i] = Rational(static_cast<long>(i) + 2);
  auto dets = parallel_map<AlphaPoly<Rational>>(npoints, threads, [&](size_t i) {
    checkpoint(what);
    return bareiss_det(eval_matrix(xs[i]));
  });

  long adeg = -1;
  for (const auto& d : dets) adeg = std::max(adeg, d.degree());
  if (adeg > adeg_total) throw Error("interpolation degree bound violated");
  std::vector<RatFuncQ> coeffs(static_cast<size_t>(adeg) + 1);
  auto interped = parallel_map<LaurentPoly>(static_cast<size_t>(adeg) + 1, threads, [&](size_t e) {
    std::vector<Rational> ys(npoints);
    for (size_t i = 0; i < npoints; ++i)
      ys[i] = dets[i][e] * rat_pow(xs[i], -qlo);
    std::vector<Rational> poly = detail::newton_interpolate(xs, std::move(ys));
    LaurentPoly out;
    for (size_t k = 0; k < poly.size(); ++k)
      out += LaurentPoly::q_power(static_cast<long>(k) + qlo, poly[k]);
    return out;
  });
  for (size_t e = 0; e < interped.size(); ++e) coeffs[e] = RatFuncQ(interped[e]);
  Poly result(std::move(coeffs));
  // Two fresh evaluation points double-check the assembled polynomial.
  for (long extra = 0; extra < 2; ++extra) {
    Rational q0(static_cast<long>(npoints) + 2 + extra);
    AlphaPoly<Rational> direct = bareiss_det(eval_matrix(q0));
    std::vector<Rational> assembled;
    for (const auto& c : result.coeffs()) assembled.push_back(c.num().eval_q(q0));
    if (AlphaPoly<Rational>(std::move(assembled)) != direct)
      throw Error("interpolated determinant failed verification for " + what);
  }
  return result;
}

}  // namespace qdet
