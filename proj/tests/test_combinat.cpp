#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdet/combinat.hpp"

using namespace qdet;

TEST_CASE("permutation statistics") {
  Perm id3 = perm_identity(3);
  CHECK(perm_inversions(id3) == 0);
  CHECK(perm_cycles(id3) == 3);
  CHECK(perm_reduced_word(id3).empty());

  Perm s1 = {1, 0, 2};
  CHECK(perm_inversions(s1) == 1);
  CHECK(perm_cycles(s1) == 2);
  CHECK(perm_reduced_word(s1) == std::vector<int>{0});

  Perm w0 = perm_longest(4);
  size_t brute = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (w0[i] > w0[j]) ++brute;
  CHECK(brute == 6);
  CHECK(perm_inversions(w0) == 6);
  CHECK(perm_cycles(w0) == 2);
  auto word = perm_reduced_word(w0);
  CHECK(word.size() == 6);
  Perm rebuilt = perm_identity(4);
  for (int i : word) {
    Perm s = perm_identity(4);
    std::swap(s[static_cast<size_t>(i)], s[static_cast<size_t>(i) + 1]);
    rebuilt = perm_mul(rebuilt, s);
  }
  CHECK(rebuilt == w0);
}

TEST_CASE("inverse preserves statistics") {
  for (const Perm& w : all_perms(5)) {
    Perm wi = perm_inverse(w);
    CHECK(perm_inversions(w) == perm_inversions(wi));
    CHECK(perm_cycles(w) == perm_cycles(wi));
  }
}

TEST_CASE("partitions and conjugates") {
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0].str() == "4");
  CHECK(p4[1].str() == "3,1");
  CHECK(p4[2].str() == "2,2");
  CHECK(p4[3].str() == "2,1,1");
  CHECK(p4[4].str() == "1,1,1,1");
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
  CHECK(Partition::parse("3,1").parts == std::vector<int>{3, 1});
  CHECK_THROWS_AS(Partition::parse("1,3"), Error);
}

TEST_CASE("standard tableaux counts") {
  CHECK(standard_count(Partition({2, 1})) == 2);
  CHECK(standard_count(Partition({3, 1})) == 3);
  CHECK(standard_count(Partition({2, 2})) == 2);
  // sum of squares is n!
  for (int n = 1; n <= 6; ++n) {
    long total = 0, fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    for (const auto& lam : partitions_of(n)) {
      long f = standard_count(lam);
      total += f * f;
    }
    CHECK(total == fact);
  }
}

TEST_CASE("tableau tuples") {
  auto t21 = standard_tableaux(Partition({2, 1}));
  REQUIRE(t21.size() == 2);
  CHECK(tableau_tuple(t21[0]) == WeightTuple{1, 1, 2});  // 12|3
  CHECK(tableau_tuple(t21[1]) == WeightTuple{1, 2, 1});  // 13|2
  CHECK(t21[0].str() == "12|3");
  CHECK(t21[1].str() == "13|2");

  auto row = standard_tableaux(Partition({3}));
  REQUIRE(row.size() == 1);
  CHECK(tableau_tuple(row[0]) == WeightTuple{1, 1, 1});
  auto col = standard_tableaux(Partition({1, 1, 1}));
  REQUIRE(col.size() == 1);
  CHECK(tableau_tuple(col[0]) == WeightTuple{1, 2, 3});
}

TEST_CASE("kostka numbers") {
  CHECK(kostka_number(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  // brute-force oracle for shape (2,1), content (1,1,1): fillings of
  // {{a,b},{c}} with {1,2,3}, rows weakly and columns strictly increasing
  int count = 0;
  int vals[3] = {1, 2, 3};
  std::sort(vals, vals + 3);
  do {
    int a = vals[0], b = vals[1], c = vals[2];
    if (a <= b && a < c) ++count;
  } while (std::next_permutation(vals, vals + 3));
  CHECK(count == 2);

  for (const auto& lam : partitions_of(4)) CHECK(kostka_number(lam, lam) == 1);

  auto t = kostka_table(4);  // internal K*K^{-1} = I assertion must pass
  CHECK(t.kostka[t.index(Partition({3, 1}))][t.index(Partition({2, 1, 1}))] == 2);
  CHECK(t.kostka[t.index(Partition({2, 2}))][t.index(Partition({1, 1, 1, 1}))] == 2);
  // unitriangular w.r.t. dominance: K[l][m] != 0 implies l dominates m
  for (size_t i = 0; i < t.order.size(); ++i)
    for (size_t j = 0; j < t.order.size(); ++j)
      if (t.kostka[i][j] != 0) CHECK(dominates(t.order[i], t.order[j]));
}

TEST_CASE("weight tuples and canonical index order") {
  Weight w11 = {1, 1};
  auto tups = weight_tuples(w11);
  REQUIRE(tups.size() == 2);
  CHECK(tups[0] == WeightTuple{1, 2});
  CHECK(tups[1] == WeightTuple{2, 1});
  CHECK(canonical_tuple(w11) == WeightTuple{1, 2});

  Weight w210 = {2, 1, 0};
  auto t3 = weight_tuples(w210);
  REQUIRE(t3.size() == 3);
  CHECK(t3[0] == WeightTuple{1, 1, 2});
  CHECK(t3[1] == WeightTuple{1, 2, 1});
  CHECK(t3[2] == WeightTuple{2, 1, 1});
  CHECK(canonical_tuple(w210) == WeightTuple{1, 1, 2});

  Weight w021 = {0, 2, 1};
  CHECK(dominant_of(w021) == Partition({2, 1}));
  CHECK(weight_tuples(w021).size() == 3);

  CHECK(weight_of(WeightTuple{1, 2, 1}, 3) == Weight{2, 1, 0});
}

TEST_CASE("cycle sums factor as stated") {
  // k = n = 3, g = id: (1+a)(1+2a)
  auto s3 = cycle_sum(3, perm_identity(3), 3);
  CHECK(s3 == classical_content_product(3));
  // k = 2, n = 3: 1 + a
  auto s2 = cycle_sum(2, perm_identity(3), 3);
  CHECK(s2 == AlphaPoly<Rational>::one_plus(Rational(1)));

  // k = 3, n = 4, random g: alpha^(4-cyc(w0 g)) (1+a)(1+2a) with w0 from
  // brute force over the subgroup
  std::mt19937_64 rng(99);
  auto perms4 = all_perms(4);
  for (int it = 0; it < 25; ++it) {
    const Perm& g = perms4[rng() % perms4.size()];
    auto got = cycle_sum(3, g, 4);
    size_t best_cyc = 0;
    for (const Perm& u : all_perms(3)) {
      Perm w = perm_identity(4);
      std::copy(u.begin(), u.end(), w.begin());
      best_cyc = std::max(best_cyc, perm_cycles(perm_mul(w, g)));
    }
    auto expected = AlphaPoly<Rational>::alpha_power(4 - best_cyc) * classical_content_product(3);
    CHECK(got == expected);
  }

  // identity over the full group, n <= 7
  for (size_t n = 1; n <= 7; ++n)
    CHECK(cycle_sum(n, perm_identity(n), n) == classical_content_product(n));
}

TEST_CASE("content polynomial of (2,1)") {
  // contents {0, 1, -1}: (1+a)(1-a)
  auto c = content_polynomial(Partition({2, 1}));
  auto expected = AlphaPoly<Rational>::one_plus(Rational(1)) *
                  AlphaPoly<Rational>::one_plus(Rational(-1));
  CHECK(c == expected);
}
