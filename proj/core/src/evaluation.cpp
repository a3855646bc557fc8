#include "revrec/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "revrec/errors.hpp"
#include "revrec/sampling.hpp"

namespace revrec {

namespace {

// Runs body(i) for i in [0, n) on up to `jobs` threads. Each index is written
// by exactly one thread, so callers fill preallocated slots and reduce in
// index order afterwards. The exception of the lowest failing index wins.
template <typename Body>
void parallel_for(std::size_t n, unsigned jobs, Body body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), n);
  std::vector<std::exception_ptr> errors(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_inputs(const Corpus& corpus, const EvalConfig& config, const EmbeddingTable* table) {
  validate_config(config);
  if (corpus.empty()) throw EmptyCorpusError("cannot evaluate an empty corpus");
  for (const auto& selection : config.methods) {
    if (selection.needs_embeddings() && table == nullptr) {
      throw ConfigError("selection '" + selection.name() + "' uses RC_CS, which needs an embedding table");
    }
  }
}

std::vector<MetricRow> metric_rows(const std::string& method, std::span<const EvalCase> cases,
                                   const std::vector<int>& k_values) {
  std::vector<MetricRow> rows;
  for (int k : k_values) rows.push_back({method, k, topk_accuracy(cases, k), mrr_at_k(cases, k)});
  return rows;
}

}  // namespace

std::string_view sampling_name(Sampling s) {
  return s == Sampling::kFixed ? "fixed" : "incremental";
}

std::optional<Sampling> parse_sampling(std::string_view name) {
  if (name == "fixed") return Sampling::kFixed;
  if (name == "incremental") return Sampling::kIncremental;
  return std::nullopt;
}

void validate_config(const EvalConfig& config) {
  if (config.k_values.empty()) throw ConfigError("no k values given");
  for (std::size_t i = 0; i < config.k_values.size(); ++i) {
    if (config.k_values[i] <= 0) throw ConfigError("k values must be positive");
    if (i > 0 && config.k_values[i] <= config.k_values[i - 1]) {
      throw ConfigError("k values must be strictly increasing");
    }
  }
  if (!(config.test_fraction > 0.0 && config.test_fraction < 1.0)) {
    throw ConfigError("test fraction must lie in (0, 1)");
  }
  if (config.steps == 0) throw ConfigError("step count must be positive");
  if (config.jobs == 0) throw ConfigError("job count must be positive");
  if (config.methods.empty()) throw ConfigError("no method selection given");
}

std::optional<std::size_t> first_correct_rank(const EvalCase& c) {
  const auto& entries = c.recommendation.entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (c.truth.contains(entries[i].reviewer_id)) return i + 1;
  }
  return std::nullopt;
}

int topk_hit(const EvalCase& c, int k) {
  auto rank = first_correct_rank(c);
  return rank && *rank <= static_cast<std::size_t>(std::max(k, 0)) ? 1 : 0;
}

double topk_accuracy(std::span<const EvalCase> cases, int k) {
  if (cases.empty()) throw ValidationError("top-k accuracy of an empty case list", "cases");
  std::size_t hits = 0;
  for (const auto& c : cases) hits += static_cast<std::size_t>(topk_hit(c, k));
  return static_cast<double>(hits) / static_cast<double>(cases.size());
}

double mrr_at_k(std::span<const EvalCase> cases, int k) {
  if (cases.empty()) throw ValidationError("MRR of an empty case list", "cases");
  double total = 0.0;
  for (const auto& c : cases) {
    auto rank = first_correct_rank(c);
    if (rank && *rank <= static_cast<std::size_t>(std::max(k, 0))) {
      total += 1.0 / static_cast<double>(*rank);
    }
  }
  return total / static_cast<double>(cases.size());
}

std::vector<EvalCase> evaluate_cases(std::span<const ReviewRecord> history,
                                     std::span<const ReviewRecord> tests,
                                     const MethodSelection& selection,
                                     const FeatureExtractor& extractor, unsigned jobs) {
  if (history.empty()) throw EmptyHistoryError("evaluation history is empty");

  std::map<std::string, std::set<std::string>> reviewers_by_change;
  for (const auto& t : tests) reviewers_by_change[t.change_id].insert(t.reviewer_id);

  const auto history_features = extractor.extract_all(history);
  std::vector<EvalCase> cases(tests.size());
  parallel_for(tests.size(), jobs, [&](std::size_t i) {
    const auto& query = tests[i];
    cases[i].query = query;
    cases[i].truth = reviewers_by_change.at(query.change_id);
    cases[i].recommendation = {query.change_id, query.patch_id,
                               recommend(extractor(query), history_features, selection)};
  });
  return cases;
}

const MetricRow& EvalReport::at(std::string_view method, int k) const {
  for (const auto& row : rows) {
    if (row.method == method && row.k == k) return row;
  }
  throw std::out_of_range("no metric row for " + std::string(method) + " at k=" + std::to_string(k));
}

EvalReport run_fixed_eval(const Corpus& corpus, const EvalConfig& config,
                          const EmbeddingTable* table, const StopWordList& stop_words) {
  check_inputs(corpus, config, table);
  auto split = fixed_split(corpus.size(), config.test_fraction, config.rng_seed);

  std::vector<ReviewRecord> history;
  std::vector<ReviewRecord> tests;
  for (auto i : split.history) history.push_back(corpus[i]);
  for (auto i : split.test) tests.push_back(corpus[i]);

  EvalReport report;
  report.corpus_label = corpus.project();
  report.corpus_size = corpus.size();
  report.config = config;
  report.partitions.push_back({history.size(), tests.size()});

  FeatureExtractor extractor(stop_words, table);
  for (const auto& selection : config.methods) {
    auto cases = evaluate_cases(history, tests, selection, extractor, config.jobs);
    auto rows = metric_rows(selection.name(), cases, config.k_values);
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

EvalReport run_incremental_eval(const Corpus& corpus, const EvalConfig& config,
                                const EmbeddingTable* table, const StopWordList& stop_words) {
  check_inputs(corpus, config, table);
  auto steps = incremental_steps(corpus.size(), config.steps, config.test_fraction);
  auto records = corpus.records();

  EvalReport report;
  report.corpus_label = corpus.project();
  report.corpus_size = corpus.size();
  report.config = config;
  report.step_rows.resize(steps.size());

  FeatureExtractor extractor(stop_words, table);
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& step = steps[s];
    auto history = records.subspan(0, step.validation_begin);
    auto tests = records.subspan(step.validation_begin, step.validation_size());
    report.partitions.push_back({history.size(), tests.size()});
    for (const auto& selection : config.methods) {
      auto cases = evaluate_cases(history, tests, selection, extractor, config.jobs);
      auto rows = metric_rows(selection.name(), cases, config.k_values);
      report.step_rows[s].insert(report.step_rows[s].end(), rows.begin(), rows.end());
    }
  }

  // Equal-weight average over steps, reduced in step order.
  report.rows = report.step_rows.front();
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    double topk = 0.0;
    double mrr = 0.0;
    for (const auto& step : report.step_rows) {
      topk += step[r].topk_accuracy;
      mrr += step[r].mrr;
    }
    report.rows[r].topk_accuracy = topk / static_cast<double>(steps.size());
    report.rows[r].mrr = mrr / static_cast<double>(steps.size());
  }
  return report;
}

EvalReport run_eval(const Corpus& corpus, const EvalConfig& config, const EmbeddingTable* table,
                    const StopWordList& stop_words) {
  return config.sampling == Sampling::kFixed ? run_fixed_eval(corpus, config, table, stop_words)
                                             : run_incremental_eval(corpus, config, table, stop_words);
}

}  // namespace revrec
