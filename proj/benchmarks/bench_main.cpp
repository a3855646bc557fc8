#include <benchmark/benchmark.h>

#include <random>

#include "revrec/evaluation.hpp"
#include "revrec/recommender.hpp"
#include "revrec/similarity.hpp"
#include "revrec/textprep.hpp"
#include "synthetic.hpp"

namespace {

using namespace revrec;

void BM_Jaccard(benchmark::State& state) {
  auto x = tokenize_path("neutron/plugins/ml2/drivers/openvswitch/agent/ovs_neutron_agent.py");
  auto y = tokenize_path("neutron/plugins/ml2/drivers/linuxbridge/agent/common/config.py");
  for (auto _ : state) benchmark::DoNotOptimize(jaccard(x, y));
}
BENCHMARK(BM_Jaccard);

void BM_AdaptedHamming(benchmark::State& state) {
  const std::string p = "nova/compute/manager.py", q = "nova/compute/resource_tracker.py";
  for (auto _ : state) benchmark::DoNotOptimize(adapted_hamming_similarity(p, q));
}
BENCHMARK(BM_AdaptedHamming);

void BM_Cosine(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  std::vector<double> u(static_cast<std::size_t>(state.range(0))), v(u.size());
  for (auto& a : u) a = normal(rng);
  for (auto& a : v) a = normal(rng);
  for (auto _ : state) benchmark::DoNotOptimize(cosine(u, v));
}
BENCHMARK(BM_Cosine)->Arg(100)->Arg(300);

void BM_PreprocessComment(benchmark::State& state) {
  const std::string text =
      "This introduces a layering violation: the db layer should not call the REST API "
      "handler directly, please move it behind the plugin interface.";
  for (auto _ : state) benchmark::DoNotOptimize(preprocess_comment(text));
}
BENCHMARK(BM_PreprocessComment);

// One query against a history of state.range(0) records.
void BM_Recommend(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto table = testing::random_embedding_table(rng, 100);
  auto corpus = testing::planted_corpus(static_cast<std::size_t>(state.range(0)) + 1, 3);
  FeatureExtractor fx(StopWordList::bundled(), &table);
  auto features = fx.extract_all(corpus.records());
  auto query = features.back();
  features.pop_back();
  const MethodSet all{Method::kFilePathJaccard, Method::kFilePathHamming, Method::kCommentCosine,
                      Method::kCommentJaccard};
  for (auto _ : state) benchmark::DoNotOptimize(recommend(query, features, all));
}
BENCHMARK(BM_Recommend)->Arg(150)->Arg(1000);

void BM_RevFinder(benchmark::State& state) {
  auto corpus = testing::planted_corpus(static_cast<std::size_t>(state.range(0)) + 1, 4);
  FeatureExtractor fx;
  auto features = fx.extract_all(corpus.records());
  auto query = features.back();
  features.pop_back();
  for (auto _ : state) benchmark::DoNotOptimize(revfinder_recommend(query, features));
}
BENCHMARK(BM_RevFinder)->Arg(150)->Arg(1000);

void BM_CompareFixed(benchmark::State& state) {
  std::mt19937_64 rng(5);
  auto table = testing::random_embedding_table(rng, 100);
  auto corpus = testing::planted_corpus(206, 6);
  EvalConfig config;
  config.methods = all_combinations();
  config.methods.push_back(MethodSelection::revfinder());
  for (auto _ : state) benchmark::DoNotOptimize(run_eval(corpus, config, &table));
}
BENCHMARK(BM_CompareFixed)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
