#include "revrec/recommender.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "revrec/errors.hpp"
#include "revrec/similarity.hpp"

namespace revrec {

namespace {

double ranking_key(double score) { return std::round(score / kScoreTieResolution); }

}  // namespace

RecordFeatures FeatureExtractor::operator()(const ReviewRecord& record) const {
  RecordFeatures f;
  f.file_path = record.file_path;
  f.reviewer_id = record.reviewer_id;
  f.path_tokens = tokenize_path(record.file_path);
  auto tokens = preprocess_comment(record.comment, *stop_words_);
  if (table_ != nullptr) f.comment_vector = comment_vector(tokens, *table_);
  f.comment_tokens = to_set(tokens);
  return f;
}

std::vector<RecordFeatures> FeatureExtractor::extract_all(
    std::span<const ReviewRecord> records) const {
  std::vector<RecordFeatures> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back((*this)(r));
  return out;
}

double method_score(const RecordFeatures& query, const RecordFeatures& past, Method method) {
  switch (method) {
    case Method::kFilePathJaccard:
      return jaccard(query.path_tokens, past.path_tokens);
    case Method::kFilePathHamming:
      return adapted_hamming_similarity(query.file_path, past.file_path);
    case Method::kCommentCosine:
      if (!query.comment_vector || !past.comment_vector) {
        throw ConfigError("RC_CS requires an embedding table");
      }
      return cosine(query.comment_vector->values, past.comment_vector->values);
    case Method::kCommentJaccard:
      return jaccard(query.comment_tokens, past.comment_tokens);
  }
  throw ConfigError("unknown method");
}

double method_score(const ReviewRecord& query, const ReviewRecord& past, Method method,
                    const EmbeddingTable* table, const StopWordList& stop_words) {
  if (method == Method::kCommentCosine && table == nullptr) {
    throw ConfigError("RC_CS requires an embedding table");
  }
  FeatureExtractor extract(stop_words, method == Method::kCommentCosine ? table : nullptr);
  return method_score(extract(query), extract(past), method);
}

void sort_ranking(std::vector<RecommendationEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const RecommendationEntry& a, const RecommendationEntry& b) {
              double ka = ranking_key(a.score);
              double kb = ranking_key(b.score);
              if (ka != kb) return ka > kb;
              return a.reviewer_id < b.reviewer_id;
            });
}

std::vector<RecommendationEntry> recommend(const RecordFeatures& query,
                                           std::span<const RecordFeatures> history,
                                           const MethodSet& methods) {
  if (history.empty()) throw EmptyHistoryError("cannot recommend from an empty history");
  if (methods.empty()) throw ConfigError("no similarity method selected");

  const auto selected = methods.methods();
  std::vector<double> combined(history.size(), 0.0);
  std::vector<double> column(history.size());
  for (Method m : selected) {
    for (std::size_t j = 0; j < history.size(); ++j) column[j] = method_score(query, history[j], m);
    auto [lo, hi] = std::minmax_element(column.begin(), column.end());
    const double min = *lo;
    const double range = *hi - *lo;
    for (std::size_t j = 0; j < history.size(); ++j) {
      combined[j] += range > 0.0 ? (column[j] - min) / range : 0.0;
    }
  }
  for (auto& c : combined) c /= static_cast<double>(selected.size());

  std::map<std::string, std::vector<double>> per_reviewer;
  for (std::size_t j = 0; j < history.size(); ++j) {
    per_reviewer[history[j].reviewer_id].push_back(combined[j]);
  }
  std::vector<RecommendationEntry> entries;
  entries.reserve(per_reviewer.size());
  for (auto& [reviewer, values] : per_reviewer) {
    // Summing in sorted order makes the result independent of history order.
    std::sort(values.begin(), values.end());
    entries.push_back({reviewer, std::accumulate(values.begin(), values.end(), 0.0)});
  }
  sort_ranking(entries);
  return entries;
}

RecommendationList recommend(const ReviewRecord& query, std::span<const ReviewRecord> history,
                             const MethodSet& methods, const EmbeddingTable* table,
                             const StopWordList& stop_words) {
  if (history.empty()) throw EmptyHistoryError("cannot recommend from an empty history");
  if (methods.contains(Method::kCommentCosine) && table == nullptr) {
    throw ConfigError("RC_CS requires an embedding table");
  }
  if (std::find(history.begin(), history.end(), query) != history.end()) {
    throw ValidationError("query record is part of the history", "query");
  }
  FeatureExtractor extract(stop_words, table);
  auto features = extract.extract_all(history);
  return {query.change_id, query.patch_id, recommend(extract(query), features, methods)};
}

std::vector<RecommendationEntry> recommend(const RecordFeatures& query,
                                           std::span<const RecordFeatures> history,
                                           const MethodSelection& selection) {
  if (selection.is_revfinder()) return revfinder_recommend(query, history);
  return recommend(query, history, selection.methods());
}

}  // namespace revrec
