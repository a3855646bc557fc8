#pragma once

// Brute-force reference implementation used only by tests. It shares no code
// with the library: tokenization uses <regex>, kernels use long double and
// explicit set algebra, RevFinder string measures enumerate substrings, and
// sampling is re-derived from the documented rules.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "revrec/corpus.hpp"
#include "revrec/embedding.hpp"
#include "revrec/method.hpp"

namespace revrec::oracle {

struct Ranked {
  std::string reviewer;
  long double score;
};

std::set<std::string> comment_tokens(const std::string& text);
std::set<std::string> path_tokens(const std::string& path);

long double score(const ReviewRecord& query, const ReviewRecord& past, Method m,
                  const EmbeddingTable* table);

std::vector<Ranked> recommend(const ReviewRecord& query, const std::vector<ReviewRecord>& history,
                              const MethodSelection& selection, const EmbeddingTable* table);

struct Metrics {
  std::map<int, long double> topk;
  std::map<int, long double> mrr;
};

Metrics evaluate(const std::vector<ReviewRecord>& history, const std::vector<ReviewRecord>& tests,
                 const MethodSelection& selection, const EmbeddingTable* table,
                 const std::vector<int>& ks);

Metrics fixed_eval(const Corpus& corpus, const MethodSelection& selection,
                   const EmbeddingTable* table, const std::vector<int>& ks, double fraction,
                   std::uint64_t seed);

Metrics incremental_eval(const Corpus& corpus, const MethodSelection& selection,
                         const EmbeddingTable* table, const std::vector<int>& ks, double fraction,
                         std::size_t steps);

}  // namespace revrec::oracle
