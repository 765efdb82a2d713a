#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qdet/alpha_poly.hpp"

namespace qdet {

// One-line notation, 0-based internally: w[i] is the image of i.
using Perm = std::vector<uint8_t>;
// Column tuple (j_1, ..., j_n) with 1-based values in {1..n}.
using WeightTuple = std::vector<uint8_t>;

Perm perm_identity(size_t n);
bool perm_valid(const Perm& w);
Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
Perm perm_inverse(const Perm& w);
size_t perm_inversions(const Perm& w);
size_t perm_cycles(const Perm& w);
// Simple-transposition indices (0-based) with w = s[r[0]] * s[r[1]] * ...
std::vector<int> perm_reduced_word(const Perm& w);
std::vector<Perm> all_perms(size_t n);  // lexicographic
Perm perm_longest(size_t n);
// Young subgroup of S_n with consecutive blocks of the given sizes.
std::vector<Perm> young_subgroup(const std::vector<int>& blocks, size_t n);

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

  int size() const;
  int rows() const { return static_cast<int>(parts.size()); }
  int first() const { return parts.empty() ? 0 : parts[0]; }
  Partition conjugate() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string str() const;  // "2,1"
  static Partition parse(const std::string& s);
};

// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);
bool dominates(const Partition& a, const Partition& b);  // a >= b in dominance

struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // entries 1..n, rows/cols increasing

  std::string str() const;  // "12|3"
};

// Standard tableaux of a shape, ordered by the tuple of row indices of
// 1, 2, ..., n (lexicographic).
std::vector<StandardTableau> standard_tableaux(const Partition& shape);
long hook_length_count(const Partition& shape);  // f^lambda
long standard_count(const Partition& shape);     // enumeration + hook check

// j_p(T) = row index of the box containing p.
WeightTuple tableau_tuple(const StandardTableau& t);

// Kostka numbers for all partitions of n (indexed in partitions_of(n) order)
// together with the exact integer inverse of the unitriangular matrix.
struct KostkaTable {
  std::vector<Partition> order;
  std::vector<std::vector<Integer>> kostka;   // K[lambda][mu]
  std::vector<std::vector<Integer>> inverse;  // K^{-1}[lambda][mu]
  size_t index(const Partition& p) const;
};
KostkaTable kostka_table(int n);
long kostka_number(const Partition& shape, const Partition& content);

// Weight vectors: length-n lists of nonnegative integers summed to n.
using Weight = std::vector<int>;
Weight weight_of(const WeightTuple& j, size_t n);
std::vector<Weight> all_weights(int n);  // compositions of n into n parts, lex
Partition dominant_of(const Weight& w);

// I_n(lambda) in lexicographic order, and the canonical weakly increasing
// tuple k(lambda); this ordering fixes every matrix index in the project.
std::vector<WeightTuple> weight_tuples(const Weight& w);
WeightTuple canonical_tuple(const Weight& w);
Weight weight_of_partition(const Partition& p, size_t n);

// sum over w in S_k (fixing points > k) of alpha^{n - cyc(w*g)}; factors as
// alpha^{n-cyc(w0*g)} (1+alpha)...(1+(k-1)alpha) with w0 maximizing cyc.
AlphaPoly<Rational> cycle_sum(size_t k, const Perm& g, size_t n);
// Product (1+alpha)(1+2 alpha)...(1+(n-1) alpha).
AlphaPoly<Rational> classical_content_product(size_t n);
// Modified content polynomial prod over boxes (1 + (j-i) alpha).
AlphaPoly<Rational> content_polynomial(const Partition& shape);

template <class K>
AlphaPoly<K> lift_alpha(const AlphaPoly<Rational>& p) {
  std::vector<K> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(K(x));
  return AlphaPoly<K>(std::move(c));
}

std::string tuple_str(const WeightTuple& t);

}  // namespace qdet
