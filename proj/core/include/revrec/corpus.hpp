#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revrec/errors.hpp"

namespace revrec {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

// Receives non-fatal diagnostics (unknown keys, duplicate words, ...).
using WarningSink = std::function<void(const std::string&)>;

// Accepts YYYY-MM-DD, optionally followed by 'T' or ' ' and HH:MM[:SS[.fff]]
// and an optional 'Z' or +HH:MM / -HH:MM offset. No offset means UTC.
std::optional<Timestamp> parse_timestamp(std::string_view text);

// ISO-8601 UTC, e.g. "2014-03-01T12:00:00Z" ("...00.250Z" when the
// millisecond part is non-zero).
std::string format_timestamp(Timestamp ts);

// One review comment on one file of a code change.
struct ReviewRecord {
  std::string change_id;
  std::string patch_id;
  std::string file_path;
  std::uint64_t line = 0;  // informational only
  std::string comment;
  std::string reviewer_id;
  Timestamp timestamp{};
  std::string project;

  friend bool operator==(const ReviewRecord&, const ReviewRecord&) = default;
};

// Throws ValidationError naming the offending field.
void validate_record(const ReviewRecord& record);

// Chronological order; equal timestamps fall back to
// (change_id, patch_id, reviewer_id).
bool chronological_less(const ReviewRecord& a, const ReviewRecord& b);

// A single project's records in chronological order. Immutable once built.
class Corpus {
 public:
  Corpus() = default;

  // Validates every record, checks that each belongs to `project`, and sorts.
  Corpus(std::string project, std::vector<ReviewRecord> records);

  const std::string& project() const noexcept { return project_; }
  std::span<const ReviewRecord> records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const ReviewRecord& operator[](std::size_t i) const { return records_[i]; }

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  std::string project_;
  std::vector<ReviewRecord> records_;
};

// All problems found in a record file; the inherited field()/line() describe
// the first one.
class RecordFileError : public ValidationError {
 public:
  struct Issue {
    std::size_t line;
    std::string field;
    std::string message;
  };

  explicit RecordFileError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const noexcept { return issues_; }

 private:
  std::vector<Issue> issues_;
};

// Parses one line of the record format. Throws ValidationError carrying
// `line_number` and the offending field.
ReviewRecord parse_record_line(std::string_view line, std::size_t line_number,
                               const WarningSink& warn = {});

// One JSON object, no trailing newline. Key order is fixed.
std::string serialize_record(const ReviewRecord& record);

// Reads every record of a file in file order. Blank lines are skipped.
// Throws IoError if the file cannot be opened and RecordFileError listing
// every malformed line.
std::vector<ReviewRecord> read_record_file(const std::filesystem::path& path,
                                           const WarningSink& warn = {});

// Loads the records of `project` (all records when `project` is empty, in
// which case the file must hold exactly one project). Throws
// EmptyCorpusError when nothing remains.
Corpus load_corpus(const std::filesystem::path& path, std::string_view project,
                   const WarningSink& warn = {});

void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Groups records by project; result ordered by project name.
std::vector<Corpus> split_by_project(std::vector<ReviewRecord> records);

std::set<std::string> distinct_reviewers(const Corpus& corpus);

struct CorpusSummary {
  std::string project;
  std::size_t records = 0;
  std::size_t reviewers = 0;
  std::size_t files = 0;
  Timestamp first{};
  Timestamp last{};
};

CorpusSummary summarize(const Corpus& corpus);

}  // namespace revrec
