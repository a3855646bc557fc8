#include "revrec/recommender.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "revrec/errors.hpp"
#include "synthetic.hpp"

namespace revrec {
namespace {

using testing::make_record;

TEST(StringMeasureTest, CommonPrefix) {
  EXPECT_DOUBLE_EQ(longest_common_prefix_similarity("a/b/c", "a/b/d"), 0.8);
  EXPECT_DOUBLE_EQ(longest_common_prefix_similarity("ab", "abcd"), 0.5);
  EXPECT_DOUBLE_EQ(longest_common_prefix_similarity("x", "y"), 0.0);
}

TEST(StringMeasureTest, CommonSuffix) {
  EXPECT_DOUBLE_EQ(longest_common_suffix_similarity("ab/c", "xb/c"), 0.75);
  EXPECT_DOUBLE_EQ(longest_common_suffix_similarity("ab/c", "ab/d"), 0.0);
}

TEST(StringMeasureTest, CommonSubstring) {
  EXPECT_DOUBLE_EQ(longest_common_substring_similarity("ab/c", "ab"), 0.5);
  EXPECT_DOUBLE_EQ(longest_common_substring_similarity("xxabcx", "abc"), 0.5);
}

TEST(StringMeasureTest, CommonSubsequence) {
  EXPECT_DOUBLE_EQ(longest_common_subsequence_similarity("ab/c", "a/c"), 0.75);
  EXPECT_DOUBLE_EQ(longest_common_subsequence_similarity("abcde", "ace"), 0.6);
}

// Worked by hand. Component totals per reviewer (x, y, z):
//   prefix      .75  .75  0    -> x 2, y 1
//   suffix      .5   .5   .75  -> z 3, x 2, y 1
//   substring   1.25 1    .75  -> x 3, y 2, z 1
//   subsequence 1.25 1.25 .75  -> x 3, y 2, z 1
TEST(RevFinderTest, SixRecordBordaExample) {
  std::vector<ReviewRecord> h = {
      make_record("1", "ab/d", "c", "x", 1), make_record("2", "a/c", "c", "y", 2),
      make_record("3", "xb/c", "c", "z", 3), make_record("4", "ab", "c", "y", 4),
      make_record("5", "q", "c", "z", 5),    make_record("6", "zz/c", "c", "x", 6),
  };
  auto list = revfinder_recommend(make_record("q", "ab/c", "c", "?", 7), h);
  ASSERT_EQ(list.entries.size(), 3u);
  EXPECT_EQ(list.entries[0], (RecommendationEntry{"x", 10}));
  EXPECT_EQ(list.entries[1], (RecommendationEntry{"y", 6}));
  EXPECT_EQ(list.entries[2], (RecommendationEntry{"z", 5}));
}

TEST(RevFinderTest, UnrelatedReviewerGetsZeroButIsListed) {
  std::vector<ReviewRecord> h = {make_record("1", "net/a.py", "c", "alice", 1),
                                 make_record("2", "zzz", "c", "bob", 2)};
  auto list = revfinder_recommend(make_record("q", "net/b.py", "c", "?", 3), h);
  ASSERT_EQ(list.entries.size(), 2u);
  EXPECT_EQ(list.entries[0].reviewer_id, "alice");
  EXPECT_EQ(list.entries[0].score, 4.0);
  EXPECT_EQ(list.entries[1], (RecommendationEntry{"bob", 0}));
}

TEST(RevFinderTest, EmptyHistory) {
  EXPECT_THROW(revfinder_recommend(make_record("q", "a", "c", "?", 1), std::span<const ReviewRecord>{}),
               EmptyHistoryError);
}

TEST(RevFinderTest, MatchesOracleOnRandomCorpora) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    auto corpus = testing::random_small_corpus(rng, 2 + rng() % 11);
    std::vector<ReviewRecord> history(corpus.records().begin(), corpus.records().end() - 1);
    const auto& query = corpus[corpus.size() - 1];
    auto got = revfinder_recommend(query, history).entries;
    auto want = oracle::recommend(query, history, MethodSelection::revfinder(), nullptr);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t r = 0; r < got.size(); ++r) {
      EXPECT_EQ(got[r].reviewer_id, want[r].reviewer);
      EXPECT_EQ(got[r].score, static_cast<double>(want[r].score));
    }
  }
}

}  // namespace
}  // namespace revrec
