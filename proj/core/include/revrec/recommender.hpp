#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revrec/corpus.hpp"
#include "revrec/embedding.hpp"
#include "revrec/method.hpp"
#include "revrec/textprep.hpp"

namespace revrec {

// Everything the similarity methods need from one record, computed once.
struct RecordFeatures {
  std::string file_path;
  std::string reviewer_id;
  PathTokenSet path_tokens;
  TokenSet comment_tokens;
  std::optional<CommentVector> comment_vector;  // only with an embedding table
};

class FeatureExtractor {
 public:
  // Both references must outlive the extractor. `table` may be null, in which
  // case RC_CS is unavailable.
  explicit FeatureExtractor(const StopWordList& stop_words = StopWordList::bundled(),
                            const EmbeddingTable* table = nullptr)
      : stop_words_(&stop_words), table_(table) {}

  RecordFeatures operator()(const ReviewRecord& record) const;
  std::vector<RecordFeatures> extract_all(std::span<const ReviewRecord> records) const;

  const EmbeddingTable* table() const noexcept { return table_; }

 private:
  const StopWordList* stop_words_;
  const EmbeddingTable* table_;
};

// Similarity of a query record to one past record under a single method.
// Throws ConfigError for RC_CS when no comment vectors were computed.
double method_score(const RecordFeatures& query, const RecordFeatures& past, Method method);
double method_score(const ReviewRecord& query, const ReviewRecord& past, Method method,
                    const EmbeddingTable* table = nullptr,
                    const StopWordList& stop_words = StopWordList::bundled());

struct RecommendationEntry {
  std::string reviewer_id;
  double score = 0.0;

  friend bool operator==(const RecommendationEntry&, const RecommendationEntry&) = default;
};

struct RecommendationList {
  std::string change_id;
  std::string patch_id;
  std::vector<RecommendationEntry> entries;

  friend bool operator==(const RecommendationList&, const RecommendationList&) = default;
};

// Scores that agree to this resolution are ranked as ties and ordered by
// reviewer_id, so float noise from summation order cannot reorder reviewers.
inline constexpr double kScoreTieResolution = 1e-9;

// Sorts by score (descending, compared at kScoreTieResolution), then
// reviewer_id ascending.
void sort_ranking(std::vector<RecommendationEntry>& entries);

// Per method: raw score against every history record, min-max normalized
// over the history (a constant column normalizes to 0). Per record: mean of
// the normalized method scores. Per reviewer: sum over their records. Every
// reviewer in the history appears once in the result.
// Throws EmptyHistoryError and ConfigError (empty method set, RC_CS without
// comment vectors).
std::vector<RecommendationEntry> recommend(const RecordFeatures& query,
                                           std::span<const RecordFeatures> history,
                                           const MethodSet& methods);

// Convenience overload over raw records. Also rejects a query that is itself
// part of the history (ValidationError).
RecommendationList recommend(const ReviewRecord& query, std::span<const ReviewRecord> history,
                             const MethodSet& methods, const EmbeddingTable* table = nullptr,
                             const StopWordList& stop_words = StopWordList::bundled());

// Path-similarity components of the RevFinder baseline. Each is the length of
// the common part divided by the longer path's length.
double longest_common_prefix_similarity(std::string_view a, std::string_view b);
double longest_common_suffix_similarity(std::string_view a, std::string_view b);
double longest_common_substring_similarity(std::string_view a, std::string_view b);
double longest_common_subsequence_similarity(std::string_view a, std::string_view b);

// RevFinder: each of the four components ranks reviewers by their summed
// per-record similarity; the rankings are merged by Borda count. In a
// component, only reviewers with a positive score are ranked, and the one at
// 0-based position i of n gets n - i points. Entry scores are Borda totals.
std::vector<RecommendationEntry> revfinder_recommend(const RecordFeatures& query,
                                                     std::span<const RecordFeatures> history);
RecommendationList revfinder_recommend(const ReviewRecord& query,
                                       std::span<const ReviewRecord> history);

// Dispatches on the selection kind.
std::vector<RecommendationEntry> recommend(const RecordFeatures& query,
                                           std::span<const RecordFeatures> history,
                                           const MethodSelection& selection);

}  // namespace revrec
