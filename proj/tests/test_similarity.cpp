#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "grsum/similarity.hpp"
#include "oracles/oracles.hpp"

using namespace grsum;

namespace {

Sentence with_lemmas(std::vector<std::string> lemmas) {
  Sentence s;
  std::sort(lemmas.begin(), lemmas.end());
  s.tokens = lemmas;
  s.content_lemmas = std::move(lemmas);
  return s;
}

}  // namespace

TEST(Overlap, IdenticalFourLemmas) {
  const auto a = with_lemmas({"w", "x", "y", "z"});
  // 4 / (2 ln 4)
  EXPECT_NEAR(overlap_similarity(a, a), 4.0 / (2.0 * std::log(4.0)), 1e-15);
  EXPECT_NEAR(overlap_similarity(a, a), 1.4427, 1e-4);
}

TEST(Overlap, DisjointIsZero) {
  EXPECT_EQ(overlap_similarity(with_lemmas({"a", "b"}), with_lemmas({"c", "d"})), 0.0);
}

TEST(Overlap, DenominatorGuard) {
  EXPECT_EQ(overlap_similarity(with_lemmas({"a"}), with_lemmas({"a"})), 0.0);
  EXPECT_EQ(overlap_similarity(with_lemmas({}), with_lemmas({"a", "b"})), 0.0);
  // ln 1 + ln 2 > 0, so a single shared word still scores.
  EXPECT_NEAR(overlap_similarity(with_lemmas({"a"}), with_lemmas({"a", "b"})), 1.0 / std::log(2.0),
              1e-15);
}

TEST(Overlap, SymmetricAndBounded) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    auto draw = [&] {
      std::vector<std::string> v;
      for (auto k = rng() % 8; k > 0; --k) v.push_back(std::string(1, static_cast<char>('a' + rng() % 6)));
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return with_lemmas(v);
    };
    const auto a = draw();
    const auto b = draw();
    const double ab = overlap_similarity(a, b);
    EXPECT_EQ(ab, overlap_similarity(b, a));
    EXPECT_GE(ab, 0.0);
    const double na = static_cast<double>(a.content_lemmas.size());
    const double nb = static_cast<double>(b.content_lemmas.size());
    const double denom = std::log(na) + std::log(nb);
    if (ab > 0.0) {
      EXPECT_LE(ab, std::min(na, nb) / denom + 1e-12);
    }
  }
}

TEST(Ted, IdenticalTreesAreZero) {
  const auto t = DepTree({"a", "b", "c", "d"}, {DepTree::npos, 0, 0, 2});
  EXPECT_EQ(ted(t, t), 0.0);
}

TEST(Ted, SingleNodeRelabel) {
  EXPECT_EQ(ted(fallback_tree({"a"}), fallback_tree({"b"})), 1.0);
}

TEST(Ted, ChainVersusSingleNode) {
  const auto chain = fallback_tree({"a", "b"});
  const auto single = fallback_tree({"a"});
  // Frozen from the exhaustive mapping search.
  const oracle::PlainTree pa{{"a", "b"}, {-1, 0}};
  const oracle::PlainTree pb{{"a"}, {-1}};
  ASSERT_EQ(oracle::ted_brute_force(pa, pb), 1);
  EXPECT_EQ(ted(chain, single), 1.0);
  EXPECT_EQ(ted(single, chain), 1.0);
}

TEST(Ted, ClassicExample) {
  // f(d(a, c(b)), e) vs f(c(d(a, b)), e): distance 2 under unit costs.
  const auto t1 = DepTree({"f", "d", "a", "c", "b", "e"}, {DepTree::npos, 0, 1, 1, 3, 0});
  const auto t2 = DepTree({"f", "c", "d", "a", "b", "e"}, {DepTree::npos, 0, 1, 2, 2, 0});
  EXPECT_EQ(ted(t1, t2), 2.0);
}

TEST(Ted, MatchesBruteForceOnSmallTrees) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = oracle::random_plain_tree(rng, 5, 3);
    const auto b = oracle::random_plain_tree(rng, 5, 3);
    EXPECT_EQ(ted(oracle::to_dep_tree(a), oracle::to_dep_tree(b)),
              static_cast<double>(oracle::ted_brute_force(a, b)));
  }
}

TEST(Ted, MetricAxioms) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::to_dep_tree(oracle::random_plain_tree(rng, 9, 3));
    const auto b = oracle::to_dep_tree(oracle::random_plain_tree(rng, 9, 3));
    const auto c = oracle::to_dep_tree(oracle::random_plain_tree(rng, 9, 3));
    EXPECT_EQ(ted(a, a), 0.0);
    EXPECT_EQ(ted(a, b), ted(b, a));
    EXPECT_LE(ted(a, c), ted(a, b) + ted(b, c));
  }
}

TEST(Ted, CustomCostModel) {
  EditCostModel costs{2.0, 3.0, 10.0};
  // Relabel (10) is dearer than delete + insert (3 + 2).
  EXPECT_EQ(ted(fallback_tree({"a"}), fallback_tree({"b"}), costs), 5.0);
  EXPECT_EQ(ted(fallback_tree({"a", "b"}), fallback_tree({"a"}), costs), 3.0);
}

TEST(TedSimilarity, Formula) {
  EXPECT_EQ(similarity_from_distance(0.0), 1.0);
  EXPECT_EQ(similarity_from_distance(1.0), 0.5);
  EXPECT_EQ(similarity_from_distance(3.0), 0.25);
  EXPECT_EQ(ted_similarity(fallback_tree({"a", "b"}), fallback_tree({"a", "b"})), 1.0);
  EXPECT_EQ(ted_similarity(fallback_tree({"a"}), fallback_tree({"b"})), 0.5);
}

TEST(Pairwise, Counts) {
  Document doc;
  auto add = [&](std::vector<std::string> lemmas) {
    auto s = with_lemmas(lemmas);
    s.index = doc.sentences.size();
    doc.trees.push_back(fallback_tree(s.tokens));
    doc.sentences.push_back(std::move(s));
  };
  add({"a", "b"});
  EXPECT_TRUE(pairwise_similarities(doc, Metric::overlap).empty());
  add({"a", "c"});
  add({"b", "c"});
  add({"a", "b", "c"});
  const auto scores = pairwise_similarities(doc, Metric::overlap);
  ASSERT_EQ(scores.size(), 6u);
  for (std::size_t k = 1; k < scores.size(); ++k) {
    EXPECT_TRUE(std::pair(scores[k - 1].i, scores[k - 1].j) < std::pair(scores[k].i, scores[k].j));
  }
  EXPECT_EQ(pairwise_similarities(doc, Metric::ted).size(), 6u);
}

TEST(Pairwise, IdenticalSentencesUnderTed) {
  Document doc;
  for (std::size_t k = 0; k < 3; ++k) {
    auto s = with_lemmas({"x", "y"});
    s.index = k;
    doc.trees.push_back(fallback_tree({"x", "y"}));
    doc.sentences.push_back(s);
  }
  for (const auto& s : pairwise_similarities(doc, Metric::ted)) EXPECT_EQ(s.value, 1.0);
}
