#include "demazure/characters.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace demazure;

namespace {

ClassicalCharacter from_map(const std::map<Weight, long>& m) {
  ClassicalCharacter ch;
  for (const auto& [w, c] : m) ch.add(w, c);
  return ch;
}

/// Gaussian binomial [m choose k]_q as coefficient list.
std::vector<long> q_binomial(int m, int k) {
  if (k < 0 || k > m) return {};
  if (k == 0 || k == m) return {1};
  // [m,k] = [m-1,k-1] + q^k [m-1,k]
  auto a = q_binomial(m - 1, k - 1), b = q_binomial(m - 1, k);
  std::vector<long> out(std::max(a.size(), b.size() + k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + k] += b[i];
  return out;
}

/// s_i applied to a workspace key at the given level.
std::pair<Weight, int> reflect_key(int i, const std::pair<Weight, int>& key, int level) {
  const int n = key.first.rank();
  const int m = i == 0 ? level - key.first.coord_sum() : key.first.coord(i);
  if (i == 0) return {key.first + m * RootRange(1, n).as_weight(n), key.second - m};
  return {key.first - m * Weight::simple_root(n, i), key.second};
}

bool s_invariant(int i, const AffineCharacterWorkspace& ws) {
  for (const auto& [k, c] : ws.terms) {
    auto it = ws.terms.find(reflect_key(i, k, ws.level));
    if (it == ws.terms.end() || it->second != c) return false;
  }
  return true;
}

AffineCharacterWorkspace random_ws(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> c(-3, 3), off(-2, 2), coef(1, 3), lv(1, 3), cnt(1, 4);
  AffineCharacterWorkspace ws;
  ws.level = lv(rng);
  const int k = cnt(rng);
  for (int t = 0; t < k; ++t) {
    Weight w(n);
    for (int i = 1; i <= n; ++i) w.coord(i) = c(rng);
    ws.add(w, off(rng), (t % 2 ? -1 : 1) * coef(rng));
  }
  return ws;
}

}  // namespace

TEST(WeylCharacter, Examples) {
  const auto triv = weyl_character(Weight{0, 0});
  EXPECT_EQ(triv.terms.size(), 1u);
  EXPECT_EQ(triv.at(Weight{0, 0}), 1);
  const auto s = weyl_character(Weight{3});
  for (int k = -3; k <= 3; k += 2) EXPECT_EQ(s.at(Weight{k}), 1);
  EXPECT_EQ(s.dimension(), 4);
  const auto adj = weyl_character(Weight{1, 1});
  EXPECT_EQ(adj.dimension(), 8);
  EXPECT_EQ(adj.at(Weight{0, 0}), 2);
  EXPECT_EQ(adj.at(Weight{2, -1}), 1);
  EXPECT_THROW(weyl_character(Weight{-1}), std::invalid_argument);
}

TEST(WeylCharacter, MatchesPatternEnumeration) {
  for (int n = 1; n <= 3; ++n)
    for (const Weight& mu : oracle::small_dominant(n, n == 3 ? 4 : 5)) {
      const auto ch = weyl_character(mu);
      EXPECT_EQ(ch, from_map(oracle::gt_character(mu))) << mu;
      EXPECT_TRUE(is_weyl_invariant(ch));
      EXPECT_EQ(ch.dimension(), weyl_dimension(mu).get_si());
    }
}

TEST(WeylCharacter, ClebschGordan) {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      ClassicalCharacter rhs;
      for (int k = 0; k <= std::min(a, b); ++k)
        for (const auto& [w, m] : weyl_character(Weight{a + b - 2 * k}).terms) rhs.add(w, m);
      EXPECT_EQ(multiply(weyl_character(Weight{a}), weyl_character(Weight{b})), rhs);
    }
  EXPECT_EQ(power(weyl_character(Weight{1}), 0, 1), trivial_character(1));
  EXPECT_EQ(power(weyl_character(Weight{1}), 3, 1).dimension(), 8);
}

TEST(DemazureOperator, Examples) {
  AffineCharacterWorkspace l1(AffineWeight::fundamental(1, 1));
  const auto d1 = demazure_op(1, l1);
  EXPECT_EQ(d1.terms.size(), 2u);
  EXPECT_EQ(d1.terms.at({Weight{1}, 0}), 1);
  EXPECT_EQ(d1.terms.at({Weight{-1}, 0}), 1);
  EXPECT_EQ(demazure_op(0, l1), l1);

  AffineCharacterWorkspace l0(AffineWeight::fundamental(1, 0));
  const auto d0 = demazure_op(0, l0);
  EXPECT_EQ(d0.terms.at({Weight{0}, 0}), 1);
  EXPECT_EQ(d0.terms.at({Weight{2}, -1}), 1);

  AffineCharacterWorkspace minus_one(AffineWeight{Weight{-1}, 1, 0});
  EXPECT_TRUE(demazure_op(1, minus_one).terms.empty());

  AffineCharacterWorkspace minus_three(AffineWeight{Weight{-3}, 3, 0});
  const auto d3 = demazure_op(1, minus_three);
  EXPECT_EQ(d3.terms.size(), 2u);
  EXPECT_EQ(d3.terms.at({Weight{-1}, 0}), -1);
  EXPECT_EQ(d3.terms.at({Weight{1}, 0}), -1);
  EXPECT_THROW(demazure_op(2, l1), std::out_of_range);
}

TEST(DemazureOperator, ImageIsReflectionInvariantAndIdempotent) {
  std::mt19937 rng(17);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + t % 4;
    const auto ws = random_ws(rng, n);
    for (int i = 0; i <= n; ++i) {
      const auto d = demazure_op(i, ws);
      EXPECT_TRUE(s_invariant(i, d));
      EXPECT_EQ(demazure_op(i, d), d);
    }
  }
}

TEST(DemazureOperator, BraidRelations) {
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    const auto ws = random_ws(rng, n);
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const bool adjacent = j - i == 1 || (i == 0 && j == n);
        if (adjacent)
          EXPECT_EQ(apply_demazure_word({i, j, i}, ws), apply_demazure_word({j, i, j}, ws));
        else
          EXPECT_EQ(apply_demazure_word({i, j}, ws), apply_demazure_word({j, i}, ws));
      }
  }
}

TEST(DemazureCharacter, Examples) {
  const auto a = demazure_character(1, Weight{1, 0});
  EXPECT_EQ(a.terms.size(), 3u);
  EXPECT_EQ(a.max_grade(), 0);
  EXPECT_EQ(classicalize(a), weyl_character(Weight{1, 0}));

  const auto b = demazure_character(1, Weight{2});
  EXPECT_EQ(b.at(Weight{2}, 0), 1);
  EXPECT_EQ(b.at(Weight{0}, 0), 1);
  EXPECT_EQ(b.at(Weight{-2}, 0), 1);
  EXPECT_EQ(b.at(Weight{0}, 1), 1);
  EXPECT_EQ(b.dimension(), 4);

  EXPECT_EQ(demazure_character(2, Weight{2}).dimension(), 3);
  EXPECT_EQ(demazure_character(3, Weight{0, 0}).dimension(), 1);
  EXPECT_THROW(demazure_character(0, Weight{1}), std::invalid_argument);
  EXPECT_THROW(demazure_character(1, Weight{-1}), std::invalid_argument);
}

TEST(DemazureCharacter, LevelOneRankOneIsQBinomial) {
  for (int m = 0; m <= 8; ++m) {
    GradedCharacter expect;
    for (int k = 0; k <= m; ++k) {
      const auto q = q_binomial(m, k);
      for (std::size_t g = 0; g < q.size(); ++g) expect.add(Weight{m - 2 * k}, static_cast<int>(g), q[g]);
    }
    EXPECT_EQ(demazure_character(1, Weight{m}), expect) << m;
    EXPECT_EQ(demazure_character(1, Weight{m}).dimension(), 1L << m);
  }
}

TEST(DemazureCharacter, RankOneDimensionIsFusionProduct) {
  for (int l = 1; l <= 4; ++l)
    for (int m = 0; m <= 9; ++m) {
      long expect = m % l + 1;
      for (int k = 0; k < m / l; ++k) expect *= l + 1;
      EXPECT_EQ(demazure_character(l, Weight{m}).dimension(), expect) << l << " " << m;
    }
}

TEST(DemazureCharacter, LargeLevelIsEvaluationModule) {
  for (int n = 1; n <= 3; ++n)
    for (int l = 1; l <= 3; ++l)
      for (const Weight& mu : oracle::small_dominant(n, l)) {
        const auto ch = demazure_character(l, mu);
        EXPECT_EQ(ch.max_grade(), 0);
        EXPECT_EQ(classicalize(ch), from_map(oracle::gt_character(mu))) << l << mu;
      }
}

TEST(DemazureCharacter, StructuralProperties) {
  for (int n = 1; n <= 3; ++n)
    for (int l = 1; l <= 3; ++l)
      for (const Weight& mu : oracle::small_dominant(n, n == 3 ? 3 : 4)) {
        const auto a = demazure_character(l, mu, TieBreak::Smallest);
        EXPECT_EQ(a, demazure_character(l, mu, TieBreak::Largest));
        const auto cl = classicalize(a);
        EXPECT_TRUE(is_weyl_invariant(cl)) << l << mu;
        for (const Weight& x : weyl_orbit(mu)) EXPECT_EQ(cl.at(x), 1);
        EXPECT_EQ(a.at(mu, 0), 1);
        for (const auto& [k, m] : a.terms) {
          EXPECT_GT(m, 0);
          EXPECT_GE(k.second, 0);
          for (const auto& q : integral_root_coordinates(mu - dominant_conjugate(k.first))) EXPECT_GE(q, 0);
        }
      }
}

TEST(DemazureCharacter, GradedMultiplyAndDomination) {
  const auto a = demazure_character(1, Weight{1});
  const auto sq = graded_multiply(a, a);
  EXPECT_EQ(sq.dimension(), 4);
  EXPECT_EQ(sq.max_grade(), 0);
  EXPECT_TRUE(dominated_by(demazure_character(2, Weight{2}), demazure_character(1, Weight{2})));
  EXPECT_FALSE(dominated_by(demazure_character(1, Weight{2}), demazure_character(2, Weight{2})));
}

TEST(Identities, Examples) {
  EXPECT_TRUE(check_fusion(Weight{1}, Weight{0}));
  EXPECT_TRUE(check_fusion(Weight{1, 0}, Weight{1, 1}));
  EXPECT_TRUE(check_fusion(Weight{0, 1, 0}, Weight{1, 0, 1}));
  EXPECT_THROW(check_fusion(Weight{0}, Weight{2}), std::invalid_argument);
  EXPECT_TRUE(check_embedding_bound(Weight{1, 1}));
  EXPECT_TRUE(check_embedding_bound(Weight{3, 1, 1}));
  EXPECT_TRUE(check_level_monotone(1, Weight{3}));
  EXPECT_EQ(odd_even_parts(Weight{3, 1, 1}), (std::pair{Weight{2, 0, 1}, Weight{1, 1, 0}}));
}

TEST(Identities, EqualityWhenLevelIsLarge) {
  for (int n = 1; n <= 3; ++n)
    for (const Weight& mu : oracle::small_dominant(n, 3)) {
      const int top = pair_coroot(mu, RootRange(1, n));
      for (int l = std::max(1, top); l <= top + 1; ++l)
        EXPECT_EQ(demazure_character(l + 1, mu), demazure_character(l, mu));
    }
}
