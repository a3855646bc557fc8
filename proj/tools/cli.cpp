#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "revrec/corpus.hpp"
#include "revrec/embedding.hpp"
#include "revrec/evaluation.hpp"
#include "revrec/method.hpp"
#include "revrec/recommender.hpp"
#include "revrec/report.hpp"
#include "revrec/textprep.hpp"

namespace revrec::cli {

namespace {

struct Options {
  std::string corpus;
  std::string project;
  std::string embeddings;
  std::string stopwords;
  std::string methods;
  std::string sampling = "fixed";
  double test_fraction = 0.10;
  std::size_t steps = 4;
  std::uint64_t seed = 0;
  std::vector<int> k_values{1, 3, 5, 10};
  std::size_t top_n = 10;
  std::string out_path;
  unsigned jobs = 1;
  std::string file_path;
  std::string comment;
};

void print_error(std::ostream& err, std::string_view kind, std::string_view message) {
  err << "revrec: error[" << kind << "]: " << message << '\n';
}

std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string year_month(Timestamp ts) {
  // format_timestamp gives YYYY-MM-DDT...; keep YYYY/MM.
  auto iso = format_timestamp(ts);
  return iso.substr(0, 4) + "/" + iso.substr(5, 2);
}

// Shared resource loading for the subcommands.
class Session {
 public:
  Session(const Options& opts, std::ostream& err) : opts_(opts), err_(err) {}

  WarningSink warner() const {
    return [this](const std::string& msg) { err_ << "revrec: warning: " << msg << '\n'; };
  }

  Corpus corpus() const { return load_corpus(opts_.corpus, opts_.project, warner()); }

  const StopWordList& stop_words() {
    if (opts_.stopwords.empty()) return StopWordList::bundled();
    if (!custom_stop_words_) custom_stop_words_ = StopWordList::load(opts_.stopwords);
    return *custom_stop_words_;
  }

  // Null when no --embeddings was given.
  const EmbeddingTable* table() {
    if (opts_.embeddings.empty()) return nullptr;
    if (!table_) table_ = load_embedding_table(opts_.embeddings, warner());
    return &*table_;
  }

  void require_embeddings(const std::vector<MethodSelection>& selections) const {
    if (!opts_.embeddings.empty()) return;
    for (const auto& s : selections) {
      if (s.needs_embeddings()) {
        throw ConfigError("selection '" + s.name() +
                          "' uses RC_CS; pass --embeddings <path> to a word-vector file");
      }
    }
  }

 private:
  const Options& opts_;
  std::ostream& err_;
  std::optional<StopWordList> custom_stop_words_;
  std::optional<EmbeddingTable> table_;
};

int cmd_validate(const Options& opts, std::ostream& out, std::ostream& err) {
  Session session(opts, err);
  std::vector<Corpus> corpora;
  if (opts.project.empty()) {
    corpora = split_by_project(read_record_file(opts.corpus, session.warner()));
    if (corpora.empty()) throw EmptyCorpusError("record file '" + opts.corpus + "' is empty");
  } else {
    corpora.push_back(session.corpus());
  }
  for (const auto& corpus : corpora) {
    auto s = summarize(corpus);
    out << "project=" << s.project << " records=" << s.records << " reviewers=" << s.reviewers
        << " files=" << s.files << " span=" << year_month(s.first) << "-" << year_month(s.last)
        << '\n';
  }
  return kOk;
}

int cmd_recommend(const Options& opts, std::ostream& out, std::ostream& err) {
  Session session(opts, err);
  auto selection = parse_method_selection(opts.methods);
  session.require_embeddings({selection});
  auto corpus = session.corpus();

  ReviewRecord query;
  query.change_id = "query";
  query.file_path = opts.file_path;
  query.comment = opts.comment;
  query.project = corpus.project();

  FeatureExtractor extractor(session.stop_words(), session.table());
  auto query_features = extractor(query);
  if (query_features.comment_tokens.empty() &&
      (selection.methods().contains(Method::kCommentJaccard) ||
       selection.methods().contains(Method::kCommentCosine))) {
    err << "revrec: warning: query comment has no tokens after preprocessing; "
           "comment similarity is zero for every record\n";
  }
  auto history = extractor.extract_all(corpus.records());
  auto entries = recommend(query_features, history, selection);

  const std::size_t shown = std::min(opts.top_n, entries.size());
  for (std::size_t i = 0; i < shown; ++i) {
    out << (i + 1) << '\t' << entries[i].reviewer_id << '\t' << format_score(entries[i].score)
        << '\n';
  }
  return kOk;
}

int run_evaluation(const Options& opts, std::vector<MethodSelection> selections, std::ostream& out,
                   std::ostream& err) {
  Session session(opts, err);
  session.require_embeddings(selections);

  EvalConfig config;
  auto sampling = parse_sampling(opts.sampling);
  if (!sampling) throw ConfigError("--sampling must be 'fixed' or 'incremental'");
  config.sampling = *sampling;
  config.k_values = opts.k_values;
  config.test_fraction = opts.test_fraction;
  config.steps = opts.steps;
  config.rng_seed = opts.seed;
  config.methods = std::move(selections);
  config.jobs = opts.jobs;
  validate_config(config);

  auto corpus = session.corpus();
  auto report = run_eval(corpus, config, session.table(), session.stop_words());

  out << "seed=" << config.rng_seed << " sampling=" << sampling_name(config.sampling)
      << " corpus=" << corpus.project() << '\n';
  out << format_report_table(report);
  if (!opts.out_path.empty()) {
    write_report(report, opts.out_path);
    out << "report written to " << opts.out_path << " and " << opts.out_path << ".txt\n";
  }
  return kOk;
}

void add_corpus_flags(CLI::App* cmd, Options& opts) {
  cmd->add_option("--corpus", opts.corpus, "Record file (one JSON record per line)")->required();
  cmd->add_option("--project", opts.project, "Restrict to one project of the record file");
}

void add_resource_flags(CLI::App* cmd, Options& opts) {
  cmd->add_option("--embeddings", opts.embeddings, "Word-vector file (text format)");
  cmd->add_option("--stopwords", opts.stopwords, "Stop-word list, one word per line")
      ->envname("REVREC_STOPWORDS");
}

void add_eval_flags(CLI::App* cmd, Options& opts) {
  cmd->add_option("--sampling", opts.sampling, "fixed or incremental")
      ->check(CLI::IsMember({"fixed", "incremental"}));
  cmd->add_option("--test-fraction", opts.test_fraction, "Held-out fraction (fixed) or per-step "
                                                         "validation fraction (incremental)");
  cmd->add_option("--steps", opts.steps, "Incremental sampling steps");
  cmd->add_option("--seed", opts.seed, "RNG seed for fixed sampling");
  cmd->add_option("--k", opts.k_values, "Comma-separated k values")->delimiter(',');
  cmd->add_option("--out", opts.out_path, "Report path (CSV; text table goes to <path>.txt)");
  cmd->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Code reviewer recommendation by file-path and review-comment similarity", "revrec"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Load a record file and print its summary");
  add_corpus_flags(validate, opts);

  auto* rec = app.add_subcommand("recommend", "Rank reviewers for a new change");
  add_corpus_flags(rec, opts);
  add_resource_flags(rec, opts);
  rec->add_option("--methods", opts.methods, "e.g. FP_JC+FP_HD+RC_JC or REVFINDER")->required();
  rec->add_option("--file-path", opts.file_path, "File path of the new change")->required();
  rec->add_option("--comment", opts.comment, "Review comment of the new change");
  rec->add_option("--top-n", opts.top_n, "Number of reviewers to print");
  rec->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* evaluate = app.add_subcommand("evaluate", "Score method selections on a corpus");
  add_corpus_flags(evaluate, opts);
  add_resource_flags(evaluate, opts);
  add_eval_flags(evaluate, opts);
  evaluate->add_option("--methods", opts.methods,
                       "Comma-separated selections, e.g. FP_JC+FP_HD+RC_JC,REVFINDER")
      ->required();

  auto* compare = app.add_subcommand(
      "compare", "Evaluate all 15 method combinations and the RevFinder baseline");
  add_corpus_flags(compare, opts);
  add_resource_flags(compare, opts);
  add_eval_flags(compare, opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return kValidationError;
  }

  try {
    if (validate->parsed()) return cmd_validate(opts, out, err);
    if (rec->parsed()) return cmd_recommend(opts, out, err);
    if (evaluate->parsed()) return run_evaluation(opts, parse_method_list(opts.methods), out, err);
    auto selections = all_combinations();
    selections.push_back(MethodSelection::revfinder());
    return run_evaluation(opts, std::move(selections), out, err);
  } catch (const RecordFileError& e) {
    for (const auto& issue : e.issues()) {
      std::string where = opts.corpus + ":" + std::to_string(issue.line) + ": ";
      if (!issue.field.empty()) where += issue.field + ": ";
      print_error(err, e.kind(), where + issue.message);
    }
    return kValidationError;
  } catch (const IoError& e) {
    print_error(err, e.kind(), e.what());
    return kIoError;
  } catch (const Error& e) {
    print_error(err, e.kind(), e.what());
    return kValidationError;
  }
}

}  // namespace revrec::cli
