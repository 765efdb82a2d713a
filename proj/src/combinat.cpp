#include "qdet/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qdet {

Perm perm_identity(size_t n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

bool perm_valid(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  for (auto x : w) {
    if (x >= w.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& w) {
  Perm r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[w[i]] = static_cast<uint8_t>(i);
  return r;
}

size_t perm_inversions(const Perm& w) {
  size_t inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

size_t perm_cycles(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  size_t cycles = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = w[j]) seen[j] = true;
  }
  return cycles;
}

std::vector<int> perm_reduced_word(const Perm& w) {
  Perm cur = w;
  std::vector<int> rev;
  bool descent = true;
  while (descent) {
    descent = false;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);  // right-multiply by s_i
        rev.push_back(static_cast<int>(i));
        descent = true;
        break;
      }
    }
  }
  // cur * s_{rev[0]} * ... = identity, hence w = s_{rev[last]} ... s_{rev[0]}.
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::vector<Perm> all_perms(size_t n) {
  std::vector<Perm> out;
  Perm w = perm_identity(n);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Perm perm_longest(size_t n) {
  Perm w(n);
  for (size_t i = 0; i < n; ++i) w[i] = static_cast<uint8_t>(n - 1 - i);
  return w;
}

std::vector<Perm> young_subgroup(const std::vector<int>& blocks, size_t n) {
  std::vector<Perm> group{perm_identity(n)};
  size_t offset = 0;
  for (int b : blocks) {
    if (b <= 0 || offset + static_cast<size_t>(b) > n) throw Error("bad Young subgroup blocks");
    std::vector<Perm> extended;
    for (const Perm& u : all_perms(static_cast<size_t>(b)))
      for (const Perm& g : group) {
        Perm w = g;
        for (size_t i = 0; i < static_cast<size_t>(b); ++i)
          w[offset + i] = static_cast<uint8_t>(offset + u[i]);
        extended.push_back(std::move(w));
      }
    group = std::move(extended);
    offset += static_cast<size_t>(b);
  }
  return group;
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int c = 1; c <= first(); ++c) {
    int count = 0;
    for (int p : parts)
      if (p >= c) ++count;
    conj.push_back(count);
  }
  return Partition(conj);
}

std::string Partition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1]) throw Error("partition parts must be weakly decreasing: " + s);
  for (int p : parts)
    if (p <= 0) throw Error("partition parts must be positive: " + s);
  return Partition(parts);
}

static void partitions_rec(int n, int max_part, std::vector<int>& acc,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(n - p, p, acc, out);
    acc.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;  // descending lexicographic by construction
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int pa = 0, pb = 0;
  size_t len = std::max(a.parts.size(), b.parts.size());
  for (size_t i = 0; i < len; ++i) {
    pa += i < a.parts.size() ? a.parts[i] : 0;
    pb += i < b.parts.size() ? b.parts[i] : 0;
    if (pa < pb) return false;
  }
  return true;
}

std::string StandardTableau::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) os << "|";
    for (int x : rows[r]) os << x;
  }
  return os.str();
}

WeightTuple tableau_tuple(const StandardTableau& t) {
  int n = t.shape.size();
  WeightTuple j(static_cast<size_t>(n), 0);
  for (size_t r = 0; r < t.rows.size(); ++r)
    for (int x : t.rows[r]) j[static_cast<size_t>(x - 1)] = static_cast<uint8_t>(r + 1);
  return j;
}

static void standard_rec(const Partition& shape, std::vector<int>& fill, int next,
                         std::vector<StandardTableau>& out) {
  int n = shape.size();
  if (next > n) {
    StandardTableau t;
    t.shape = shape;
    t.rows.resize(shape.parts.size());
    for (size_t r = 0; r < shape.parts.size(); ++r)
      t.rows[r].resize(static_cast<size_t>(shape.parts[r]));
    size_t idx = 0;
    for (size_t r = 0; r < shape.parts.size(); ++r)
      for (int c = 0; c < shape.parts[r]; ++c) t.rows[r][static_cast<size_t>(c)] = fill[idx++];
    out.push_back(std::move(t));
    return;
  }
  // fill holds the current number of cells used per row via sentinel scan
  // below; `fill` is row-major cell contents, 0 = empty.
  size_t base = 0;
  for (size_t r = 0; r < shape.parts.size(); ++r) {
    size_t width = static_cast<size_t>(shape.parts[r]);
    size_t used = 0;
    while (used < width && fill[base + used] != 0) ++used;
    bool row_ok = used < width;
    bool col_ok = true;
    if (row_ok && r > 0) {
      // cell above must already be filled
      size_t above = base - static_cast<size_t>(shape.parts[r - 1]) + used;
      col_ok = fill[above] != 0;
    }
    if (row_ok && col_ok) {
      fill[base + used] = next;
      standard_rec(shape, fill, next + 1, out);
      fill[base + used] = 0;
    }
    base += width;
  }
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<StandardTableau> out;
  std::vector<int> fill(static_cast<size_t>(shape.size()), 0);
  standard_rec(shape, fill, 1, out);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return tableau_tuple(a) < tableau_tuple(b);
  });
  return out;
}

long hook_length_count(const Partition& shape) {
  Partition conj = shape.conjugate();
  Integer num = 1;
  for (int k = 2; k <= shape.size(); ++k) num *= k;
  Integer den = 1;
  for (size_t r = 0; r < shape.parts.size(); ++r)
    for (int c = 0; c < shape.parts[r]; ++c) {
      long hook = (shape.parts[r] - c) + (conj.parts[static_cast<size_t>(c)] - static_cast<long>(r)) - 1;
      den *= hook;
    }
  Integer f = num / den;
  if (f * den != num) throw Error("hook length division not exact");
  return f.get_si();
}

long standard_count(const Partition& shape) {
  long counted = static_cast<long>(standard_tableaux(shape).size());
  long hook = hook_length_count(shape);
  if (counted != hook) throw Error("standard tableau count disagrees with hook formula");
  return counted;
}

static long count_ssyt(const Partition& shape, std::vector<int> content) {
  // Backtracking over cells in row-major order: rows weakly increase,
  // columns strictly increase, content consumed exactly.
  struct Walker {
    const Partition& shape;
    std::vector<int>& content;
    std::vector<std::vector<int>> grid;
    long count = 0;
    Walker(const Partition& s, std::vector<int>& c) : shape(s), content(c) {
      grid.resize(s.parts.size());
      for (size_t r = 0; r < s.parts.size(); ++r) grid[r].assign(static_cast<size_t>(s.parts[r]), 0);
    }
    void go(size_t r, size_t c) {
      if (r == grid.size()) {
        ++count;
        return;
      }
      size_t nr = r, nc = c + 1;
      if (nc >= grid[r].size()) {
        nr = r + 1;
        nc = 0;
      }
      int lo = 1;
      if (c > 0) lo = std::max(lo, grid[r][c - 1]);
      if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
      for (int val = lo; val <= static_cast<int>(content.size()); ++val) {
        if (content[static_cast<size_t>(val - 1)] == 0) continue;
        --content[static_cast<size_t>(val - 1)];
        grid[r][c] = val;
        go(nr, nc);
        ++content[static_cast<size_t>(val - 1)];
      }
      grid[r][c] = 0;
    }
  };
  if (shape.parts.empty()) return 1;
  Walker w(shape, content);
  w.go(0, 0);
  return w.count;
}

long kostka_number(const Partition& shape, const Partition& content) {
  std::vector<int> c = content.parts;
  return count_ssyt(shape, c);
}

size_t KostkaTable::index(const Partition& p) const {
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == p) return i;
  throw Error("partition not in table: " + p.str());
}

KostkaTable kostka_table(int n) {
  KostkaTable t;
  t.order = partitions_of(n);
  size_t m = t.order.size();
  t.kostka.assign(m, std::vector<Integer>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      t.kostka[i][j] = kostka_number(t.order[i], t.order[j]);
  // K is unitriangular in the descending-lex order (K[i][j] = 0 unless i <= j
  // positionally); invert by back substitution over the integers.
  t.inverse.assign(m, std::vector<Integer>(m, 0));
  for (size_t i = 0; i < m; ++i) {
    t.inverse[i][i] = 1;
    for (size_t j = i + 1; j < m; ++j) {
      Integer acc = 0;
      for (size_t k = i; k < j; ++k) acc += t.inverse[i][k] * t.kostka[k][j];
      t.inverse[i][j] = -acc;
    }
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      Integer acc = 0;
      for (size_t k = 0; k < m; ++k) acc += t.kostka[i][k] * t.inverse[k][j];
      if (acc != (i == j ? 1 : 0)) throw Error("Kostka inverse check failed");
    }
  return t;
}

Weight weight_of(const WeightTuple& j, size_t n) {
  Weight w(n, 0);
  for (auto x : j) ++w[static_cast<size_t>(x - 1)];
  return w;
}

static void weights_rec(int n, size_t pos, size_t len, int left, Weight& acc,
                        std::vector<Weight>& out) {
  if (pos == len) {
    if (left == 0) out.push_back(acc);
    return;
  }
  for (int v = left; v >= 0; --v) {
    acc[pos] = v;
    weights_rec(n, pos + 1, len, left - v, acc, out);
  }
  acc[pos] = 0;
}

std::vector<Weight> all_weights(int n) {
  std::vector<Weight> out;
  Weight acc(static_cast<size_t>(n), 0);
  weights_rec(n, 0, static_cast<size_t>(n), n, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition dominant_of(const Weight& w) {
  std::vector<int> parts;
  for (int x : w)
    if (x > 0) parts.push_back(x);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

static void tuples_rec(const Weight& target, Weight& used, WeightTuple& acc, size_t pos,
                       std::vector<WeightTuple>& out) {
  if (pos == acc.size()) {
    out.push_back(acc);
    return;
  }
  for (size_t v = 0; v < target.size(); ++v) {
    if (used[v] >= target[v]) continue;
    ++used[v];
    acc[pos] = static_cast<uint8_t>(v + 1);
    tuples_rec(target, used, acc, pos + 1, out);
    --used[v];
  }
}

std::vector<WeightTuple> weight_tuples(const Weight& w) {
  int n = 0;
  for (int x : w) n += x;
  std::vector<WeightTuple> out;
  WeightTuple acc(static_cast<size_t>(n), 0);
  Weight used(w.size(), 0);
  tuples_rec(w, used, acc, 0, out);
  return out;  // lexicographic by construction
}

WeightTuple canonical_tuple(const Weight& w) {
  WeightTuple k;
  for (size_t v = 0; v < w.size(); ++v)
    for (int c = 0; c < w[v]; ++c) k.push_back(static_cast<uint8_t>(v + 1));
  return k;
}

Weight weight_of_partition(const Partition& p, size_t n) {
  Weight w(n, 0);
  for (size_t i = 0; i < p.parts.size(); ++i) w[i] = p.parts[i];
  return w;
}

AlphaPoly<Rational> cycle_sum(size_t k, const Perm& g, size_t n) {
  if (g.size() != n || k > n) throw Error("cycle_sum: bad subgroup spec");
  AlphaPoly<Rational> sum;
  for (const Perm& u : all_perms(k)) {
    Perm w = perm_identity(n);
    std::copy(u.begin(), u.end(), w.begin());
    size_t cyc = perm_cycles(perm_mul(w, g));
    sum += AlphaPoly<Rational>::alpha_power(n - cyc);
  }
  return sum;
}

AlphaPoly<Rational> classical_content_product(size_t n) {
  AlphaPoly<Rational> p(1);
  for (size_t k = 1; k < n; ++k)
    p *= AlphaPoly<Rational>::one_plus(Rational(static_cast<long>(k)));
  return p;
}

AlphaPoly<Rational> content_polynomial(const Partition& shape) {
  AlphaPoly<Rational> p(1);
  for (size_t r = 0; r < shape.parts.size(); ++r)
    for (int c = 0; c < shape.parts[r]; ++c) {
      long content = c - static_cast<long>(r);
      p *= AlphaPoly<Rational>::one_plus(Rational(content));
    }
  return p;
}

std::string tuple_str(const WeightTuple& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << static_cast<int>(t[i]);
  os << ")";
  return os.str();
}

}  // namespace qdet
