#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revrec/corpus.hpp"
#include "revrec/embedding.hpp"
#include "revrec/method.hpp"
#include "revrec/recommender.hpp"

namespace revrec {

enum class Sampling { kFixed, kIncremental };

std::string_view sampling_name(Sampling s);
std::optional<Sampling> parse_sampling(std::string_view name);

struct EvalConfig {
  std::vector<int> k_values{1, 3, 5, 10};
  Sampling sampling = Sampling::kFixed;
  double test_fraction = 0.10;
  std::size_t steps = 4;  // incremental only
  std::uint64_t rng_seed = 0;
  std::vector<MethodSelection> methods;
  unsigned jobs = 1;  // worker threads; results do not depend on it
};

// Throws ConfigError for non-increasing or non-positive k values, a fraction
// outside (0, 1), zero steps or jobs, or an empty method list.
void validate_config(const EvalConfig& config);

struct EvalCase {
  ReviewRecord query;
  std::set<std::string> truth;
  RecommendationList recommendation;
};

// 1-based rank of the first reviewer in truth, if any.
std::optional<std::size_t> first_correct_rank(const EvalCase& c);

int topk_hit(const EvalCase& c, int k);

// Mean of topk_hit. Throws ValidationError on an empty case list.
double topk_accuracy(std::span<const EvalCase> cases, int k);

// Mean of 1/rank of the first correct reviewer, counting 0 past rank k.
// Throws ValidationError on an empty case list.
double mrr_at_k(std::span<const EvalCase> cases, int k);

// Recommendations for every test record against `history`. The truth of a
// case is the set of reviewers of that change_id among `tests`.
std::vector<EvalCase> evaluate_cases(std::span<const ReviewRecord> history,
                                     std::span<const ReviewRecord> tests,
                                     const MethodSelection& selection,
                                     const FeatureExtractor& extractor, unsigned jobs = 1);

struct MetricRow {
  std::string method;
  int k = 0;
  double topk_accuracy = 0.0;
  double mrr = 0.0;

  friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

struct PartitionInfo {
  std::size_t history_size = 0;
  std::size_t test_size = 0;

  friend bool operator==(const PartitionInfo&, const PartitionInfo&) = default;
};

struct EvalReport {
  std::string corpus_label;
  std::size_t corpus_size = 0;
  EvalConfig config;
  std::vector<PartitionInfo> partitions;        // one per step (one for fixed)
  std::vector<MetricRow> rows;                  // method-major, then k
  std::vector<std::vector<MetricRow>> step_rows;  // incremental only, per step

  // Throws std::out_of_range when absent.
  const MetricRow& at(std::string_view method, int k) const;
};

EvalReport run_fixed_eval(const Corpus& corpus, const EvalConfig& config,
                          const EmbeddingTable* table = nullptr,
                          const StopWordList& stop_words = StopWordList::bundled());

// Metrics are computed per step and averaged with equal weights.
EvalReport run_incremental_eval(const Corpus& corpus, const EvalConfig& config,
                                const EmbeddingTable* table = nullptr,
                                const StopWordList& stop_words = StopWordList::bundled());

// Dispatches on config.sampling.
EvalReport run_eval(const Corpus& corpus, const EvalConfig& config,
                    const EmbeddingTable* table = nullptr,
                    const StopWordList& stop_words = StopWordList::bundled());

}  // namespace revrec
