#include "revrec/recommender.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracle.hpp"
#include "revrec/errors.hpp"
#include "synthetic.hpp"

namespace revrec {
namespace {

using testing::make_record;

std::vector<ReviewRecord> small_history() {
  return {
      make_record("h1", "net/router/driver.py", "socket routing", "alice", 10),
      make_record("h2", "db/schema/agent.py", "query broken", "bob", 20),
      make_record("h3", "net/socket/utils.py", "packet socket broken", "alice", 30),
  };
}

ReviewRecord small_query() {
  return make_record("q", "net/router/agent.py", "socket packet broken", "?", 40);
}

TEST(MethodScoreTest, KernelsOnRecords) {
  auto h = small_history();
  auto q = small_query();
  EXPECT_DOUBLE_EQ(method_score(q, h[0], Method::kFilePathJaccard), 0.6);
  EXPECT_DOUBLE_EQ(method_score(q, h[1], Method::kFilePathJaccard), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(method_score(q, h[0], Method::kCommentJaccard), 0.25);
  EXPECT_DOUBLE_EQ(method_score(q, h[2], Method::kCommentJaccard), 1.0);
  EXPECT_THROW(method_score(q, h[0], Method::kCommentCosine), ConfigError);
}

TEST(MethodScoreTest, CommentJaccardIgnoresStopWordsAndCase) {
  auto a = make_record("a", "x.py", "The API is broken", "r", 1);
  auto b = make_record("b", "x.py", "api BROKEN, layer", "r", 2);
  EXPECT_DOUBLE_EQ(method_score(a, b, Method::kCommentJaccard), 2.0 / 3.0);
}

TEST(RecommendTest, NormalizedCombination) {
  auto h = small_history();
  auto list = recommend(small_query(), h, MethodSet{Method::kFilePathJaccard, Method::kCommentJaccard});
  EXPECT_EQ(list.change_id, "q");
  ASSERT_EQ(list.entries.size(), 2u);
  EXPECT_EQ(list.entries[0].reviewer_id, "alice");
  EXPECT_DOUBLE_EQ(list.entries[0].score, 1.0);
  EXPECT_EQ(list.entries[1].reviewer_id, "bob");
  EXPECT_DOUBLE_EQ(list.entries[1].score, 0.0);
}

TEST(RecommendTest, ConstantColumnNormalizesToZero) {
  std::vector<ReviewRecord> h = {make_record("1", "a/b.py", "x", "r2", 1),
                                 make_record("2", "a/b.py", "x", "r1", 2)};
  auto list = recommend(make_record("q", "a/b.py", "x", "?", 3), h, MethodSet{Method::kFilePathJaccard});
  ASSERT_EQ(list.entries.size(), 2u);
  EXPECT_EQ(list.entries[0].score, 0.0);
  EXPECT_EQ(list.entries[1].score, 0.0);
  // Full tie falls back to reviewer id.
  EXPECT_EQ(list.entries[0].reviewer_id, "r1");
}

TEST(RecommendTest, PlantedOwnerRanksFirst) {
  auto corpus = testing::planted_corpus(30, 3);
  std::vector<ReviewRecord> history(corpus.records().begin(), corpus.records().end());
  auto query = make_record("q", "net/router/plugin.py", "socket tunnel: please fix", "?", 0);
  for (const auto& set : {MethodSet{Method::kFilePathJaccard}, MethodSet{Method::kCommentJaccard},
                          MethodSet{Method::kFilePathJaccard, Method::kFilePathHamming,
                                    Method::kCommentJaccard}}) {
    auto list = recommend(query, history, set);
    EXPECT_EQ(list.entries.front().reviewer_id, "alice") << set.name();
  }
}

TEST(RecommendTest, MatchesOracleOnEightRecords) {
  std::mt19937_64 rng(8);
  auto table = testing::random_embedding_table(rng, 6);
  auto corpus = testing::random_small_corpus(rng, 8);
  std::vector<ReviewRecord> history(corpus.records().begin(), corpus.records().end() - 1);
  const auto& query = corpus[7];
  for (const auto& sel : all_combinations()) {
    auto got = recommend(query, history, sel.methods(), &table).entries;
    auto want = oracle::recommend(query, history, sel, &table);
    ASSERT_EQ(got.size(), want.size()) << sel.name();
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].reviewer_id, want[i].reviewer) << sel.name();
      EXPECT_NEAR(got[i].score, static_cast<double>(want[i].score), 1e-12) << sel.name();
    }
  }
}

TEST(RecommendTest, ErrorPaths) {
  auto h = small_history();
  auto q = small_query();
  EXPECT_THROW(recommend(q, std::span<const ReviewRecord>{}, MethodSet{Method::kFilePathJaccard}),
               EmptyHistoryError);
  EXPECT_THROW(recommend(q, h, MethodSet{}), ConfigError);
  EXPECT_THROW(recommend(q, h, MethodSet{Method::kCommentCosine}), ConfigError);
  EXPECT_THROW(recommend(h[1], h, MethodSet{Method::kFilePathJaccard}), ValidationError);
}

TEST(SortRankingTest, ScoresWithinResolutionTie) {
  std::vector<RecommendationEntry> e = {{"b", 1.0}, {"a", 1.0 + 1e-13}, {"c", 2.0}};
  sort_ranking(e);
  EXPECT_EQ(e[0].reviewer_id, "c");
  EXPECT_EQ(e[1].reviewer_id, "a");
  EXPECT_EQ(e[2].reviewer_id, "b");
}

struct Scenario {
  std::vector<ReviewRecord> history;
  ReviewRecord query;
  EmbeddingTable table{4};
};

Scenario random_scenario(std::mt19937_64& rng) {
  Scenario s;
  s.table = testing::random_embedding_table(rng, 4);
  auto corpus = testing::random_small_corpus(rng, 2 + rng() % 11);
  s.history.assign(corpus.records().begin(), corpus.records().end() - 1);
  s.query = corpus[corpus.size() - 1];
  return s;
}

MethodSet random_methods(std::mt19937_64& rng) {
  MethodSet set;
  while (set.empty()) {
    for (Method m : kAllMethods) {
      if (rng() % 2) set.insert(m);
    }
  }
  return set;
}

// Shuffling the history never changes the ranking or the scores.
TEST(RecommendPropertyTest, PermutationInvariant) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto s = random_scenario(rng);
    auto methods = random_methods(rng);
    auto before = recommend(s.query, s.history, methods, &s.table);
    std::shuffle(s.history.begin(), s.history.end(), rng);
    EXPECT_EQ(recommend(s.query, s.history, methods, &s.table), before) << methods.name();
  }
}

// Reviewer totals add up to the per-record combined scores, each reviewer
// appears once, and no reviewer can exceed their record count.
TEST(RecommendPropertyTest, ScoreAccounting) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto s = random_scenario(rng);
    auto methods = random_methods(rng);
    auto list = recommend(s.query, s.history, methods, &s.table);

    std::vector<double> combined(s.history.size(), 0.0);
    for (Method m : methods.methods()) {
      std::vector<double> raw;
      for (const auto& h : s.history) raw.push_back(method_score(s.query, h, m, &s.table));
      auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
      for (std::size_t j = 0; j < raw.size(); ++j) {
        combined[j] += (*hi > *lo ? (raw[j] - *lo) / (*hi - *lo) : 0.0) / methods.size();
      }
    }
    std::map<std::string, double> expected;
    std::map<std::string, int> counts;
    for (std::size_t j = 0; j < s.history.size(); ++j) {
      expected[s.history[j].reviewer_id] += combined[j];
      ++counts[s.history[j].reviewer_id];
    }
    ASSERT_EQ(list.entries.size(), expected.size());
    double total = 0, want_total = 0;
    for (const auto& e : list.entries) {
      ASSERT_TRUE(expected.count(e.reviewer_id));
      EXPECT_NEAR(e.score, expected[e.reviewer_id], 1e-12);
      EXPECT_GE(e.score, 0.0);
      EXPECT_LE(e.score, counts[e.reviewer_id] + 1e-12);
      total += e.score;
      want_total += expected[e.reviewer_id];
    }
    EXPECT_NEAR(total, want_total, 1e-9);
  }
}

// A single-method selection ranks reviewers by their summed normalized
// score for that method alone, and adding a constant-valued method to a
// selection only rescales the scores.
TEST(RecommendPropertyTest, MethodSubsetSanity) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    auto s = random_scenario(rng);
    for (Method m : kAllMethods) {
      auto list = recommend(s.query, s.history, MethodSet{m}, &s.table);
      auto want = oracle::recommend(s.query, s.history,
                                    MethodSelection::combination(MethodSet{m}), &s.table);
      ASSERT_EQ(list.entries.size(), want.size());
      for (std::size_t r = 0; r < want.size(); ++r) {
        EXPECT_EQ(list.entries[r].reviewer_id, want[r].reviewer);
      }
      for (const auto& e : list.entries) EXPECT_LE(e.score, static_cast<double>(s.history.size()));
    }
  }
  // Identical paths make FP_HD constant, contributing nothing but the 1/2 weight.
  std::vector<ReviewRecord> h = {make_record("1", "a/b.py", "cache api", "x", 1),
                                 make_record("2", "a/b.py", "db layer", "y", 2),
                                 make_record("3", "a/b.py", "api fix", "y", 3)};
  auto q = make_record("q", "a/b.py", "api broken", "?", 4);
  auto alone = recommend(q, h, MethodSet{Method::kCommentJaccard});
  auto paired = recommend(q, h, MethodSet{Method::kFilePathHamming, Method::kCommentJaccard});
  ASSERT_EQ(alone.entries.size(), paired.entries.size());
  for (std::size_t r = 0; r < alone.entries.size(); ++r) {
    EXPECT_EQ(alone.entries[r].reviewer_id, paired.entries[r].reviewer_id);
    EXPECT_DOUBLE_EQ(alone.entries[r].score / 2, paired.entries[r].score);
  }
}

}  // namespace
}  // namespace revrec
