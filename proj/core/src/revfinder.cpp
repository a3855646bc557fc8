#include <algorithm>
#include <map>
#include <numeric>

#include "revrec/errors.hpp"
#include "revrec/recommender.hpp"

namespace revrec {

namespace {

double normalized(std::size_t common, std::string_view a, std::string_view b) {
  const std::size_t longer = std::max(a.size(), b.size());
  return longer == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(longer);
}

using Component = double (*)(std::string_view, std::string_view);

constexpr Component kComponents[] = {
    longest_common_prefix_similarity,
    longest_common_suffix_similarity,
    longest_common_substring_similarity,
    longest_common_subsequence_similarity,
};

}  // namespace

double longest_common_prefix_similarity(std::string_view a, std::string_view b) {
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return normalized(static_cast<std::size_t>(ia - a.begin()), a, b);
}

double longest_common_suffix_similarity(std::string_view a, std::string_view b) {
  auto [ia, ib] = std::mismatch(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  return normalized(static_cast<std::size_t>(ia - a.rbegin()), a, b);
}

double longest_common_substring_similarity(std::string_view a, std::string_view b) {
  // run[j]: length of the common run ending at a[i-1], b[j-1].
  std::vector<std::size_t> run(b.size() + 1, 0);
  std::size_t best = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = b.size(); j >= 1; --j) {
      run[j] = a[i - 1] == b[j - 1] ? run[j - 1] + 1 : 0;
      best = std::max(best, run[j]);
    }
  }
  return normalized(best, a, b);
}

double longest_common_subsequence_similarity(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return normalized(prev[b.size()], a, b);
}

std::vector<RecommendationEntry> revfinder_recommend(const RecordFeatures& query,
                                                     std::span<const RecordFeatures> history) {
  if (history.empty()) throw EmptyHistoryError("cannot recommend from an empty history");

  std::map<std::string, double> borda;
  for (const auto& past : history) borda.emplace(past.reviewer_id, 0.0);

  for (Component component : kComponents) {
    std::map<std::string, std::vector<double>> per_reviewer;
    for (const auto& past : history) {
      per_reviewer[past.reviewer_id].push_back(component(query.file_path, past.file_path));
    }
    std::vector<RecommendationEntry> ranking;
    for (auto& [reviewer, values] : per_reviewer) {
      std::sort(values.begin(), values.end());
      double total = std::accumulate(values.begin(), values.end(), 0.0);
      if (total > 0.0) ranking.push_back({reviewer, total});
    }
    sort_ranking(ranking);
    const std::size_t n = ranking.size();
    for (std::size_t i = 0; i < n; ++i) borda[ranking[i].reviewer_id] += static_cast<double>(n - i);
  }

  std::vector<RecommendationEntry> entries;
  entries.reserve(borda.size());
  for (const auto& [reviewer, points] : borda) entries.push_back({reviewer, points});
  sort_ranking(entries);
  return entries;
}

RecommendationList revfinder_recommend(const ReviewRecord& query,
                                       std::span<const ReviewRecord> history) {
  if (history.empty()) throw EmptyHistoryError("cannot recommend from an empty history");
  // Only paths and reviewer ids matter here.
  auto slim = [](const ReviewRecord& r) {
    RecordFeatures f;
    f.file_path = r.file_path;
    f.reviewer_id = r.reviewer_id;
    return f;
  };
  std::vector<RecordFeatures> features;
  features.reserve(history.size());
  for (const auto& r : history) features.push_back(slim(r));
  return {query.change_id, query.patch_id, revfinder_recommend(slim(query), features)};
}

}  // namespace revrec
