#include "revrec/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace revrec {

namespace {

using nlohmann::json;
using namespace std::chrono;

constexpr std::string_view kStringFields[] = {"change_id", "patch_id", "file_path",
                                              "comment",   "reviewer_id", "project"};

bool parse_fixed_int(std::string_view text, std::size_t pos, std::size_t width, int& out) {
  if (pos + width > text.size()) return false;
  int value = 0;
  for (std::size_t i = pos; i < pos + width; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
  }
  out = value;
  return true;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n\f\v");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n\f\v");
  return std::string(s.substr(b, e - b + 1));
}

// Opaque identifiers are sometimes exported as numbers.
std::string opaque_string(const json& value, std::string_view field, std::size_t line) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer() || value.is_number_unsigned()) return value.dump();
  throw ValidationError("field '" + std::string(field) + "' must be a string", std::string(field),
                        line);
}

}  // namespace

std::optional<Timestamp> parse_timestamp(std::string_view text) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0, ms = 0;
  if (!parse_fixed_int(text, 0, 4, y) || text.size() < 10 || text[4] != '-' ||
      !parse_fixed_int(text, 5, 2, mo) || text[7] != '-' || !parse_fixed_int(text, 8, 2, d)) {
    return std::nullopt;
  }
  std::size_t pos = 10;
  if (pos < text.size() && (text[pos] == 'T' || text[pos] == ' ')) {
    if (!parse_fixed_int(text, pos + 1, 2, h) || pos + 3 >= text.size() || text[pos + 3] != ':' ||
        !parse_fixed_int(text, pos + 4, 2, mi)) {
      return std::nullopt;
    }
    pos += 6;
    if (pos < text.size() && text[pos] == ':') {
      if (!parse_fixed_int(text, pos + 1, 2, s)) return std::nullopt;
      pos += 3;
      if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          if (digits < 3) ms = ms * 10 + (text[pos] - '0');
          ++digits;
          ++pos;
        }
        if (digits == 0) return std::nullopt;
        for (std::size_t i = digits; i < 3; ++i) ms *= 10;
      }
    }
  }
  int offset_minutes = 0;
  if (pos < text.size()) {
    if (text[pos] == 'Z' && pos + 1 == text.size()) {
      pos += 1;
    } else if ((text[pos] == '+' || text[pos] == '-') && text.size() == pos + 6 &&
               text[pos + 3] == ':') {
      int oh = 0, om = 0;
      if (!parse_fixed_int(text, pos + 1, 2, oh) || !parse_fixed_int(text, pos + 4, 2, om) ||
          oh > 23 || om > 59) {
        return std::nullopt;
      }
      offset_minutes = (oh * 60 + om) * (text[pos] == '-' ? -1 : 1);
      pos += 6;
    } else {
      return std::nullopt;
    }
  }
  if (pos != text.size()) return std::nullopt;
  if (h > 23 || mi > 59 || s > 60) return std::nullopt;

  year_month_day date{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!date.ok()) return std::nullopt;
  auto t = sys_days{date} + hours{h} + minutes{mi} + seconds{s} + milliseconds{ms} -
           minutes{offset_minutes};
  return time_point_cast<milliseconds>(t);
}

std::string format_timestamp(Timestamp ts) {
  auto day_point = floor<days>(ts);
  year_month_day date{day_point};
  hh_mm_ss<milliseconds> tod{ts - day_point};
  char buf[40];
  int n = std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d",
                        static_cast<int>(date.year()), static_cast<unsigned>(date.month()),
                        static_cast<unsigned>(date.day()), static_cast<int>(tod.hours().count()),
                        static_cast<int>(tod.minutes().count()),
                        static_cast<int>(tod.seconds().count()));
  std::string out(buf, static_cast<std::size_t>(n));
  if (auto ms = tod.subseconds().count(); ms != 0) {
    std::snprintf(buf, sizeof buf, ".%03d", static_cast<int>(ms));
    out += buf;
  }
  out += 'Z';
  return out;
}

void validate_record(const ReviewRecord& record) {
  if (record.change_id.empty()) throw ValidationError("change_id is empty", "change_id");
  if (record.file_path.empty()) throw ValidationError("file_path is empty", "file_path");
  std::string_view path = record.file_path;
  std::size_t start = 0;
  while (start <= path.size()) {
    auto end = path.find('/', start);
    if (end == std::string_view::npos) end = path.size();
    auto segment = path.substr(start, end - start);
    if (!segment.empty() && is_blank(segment)) {
      throw ValidationError("file_path has a whitespace-only segment", "file_path");
    }
    start = end + 1;
  }
  if (trim(record.comment).empty()) throw ValidationError("comment is empty", "comment");
  if (record.reviewer_id.empty()) throw ValidationError("reviewer_id is empty", "reviewer_id");
}

bool chronological_less(const ReviewRecord& a, const ReviewRecord& b) {
  return std::tie(a.timestamp, a.change_id, a.patch_id, a.reviewer_id) <
         std::tie(b.timestamp, b.change_id, b.patch_id, b.reviewer_id);
}

Corpus::Corpus(std::string project, std::vector<ReviewRecord> records)
    : project_(std::move(project)), records_(std::move(records)) {
  for (const auto& r : records_) {
    validate_record(r);
    if (r.project != project_) {
      throw ValidationError("record of change '" + r.change_id + "' belongs to project '" +
                                r.project + "', not '" + project_ + "'",
                            "project");
    }
  }
  // stable_sort keeps file order for records that are equal on every key.
  std::stable_sort(records_.begin(), records_.end(), chronological_less);
}

RecordFileError::RecordFileError(std::vector<Issue> issues)
    : ValidationError(
          [&] {
            std::ostringstream msg;
            msg << issues.size() << " malformed record(s); first at line " << issues.front().line
                << ": " << issues.front().message;
            return msg.str();
          }(),
          issues.front().field, issues.front().line),
      issues_(std::move(issues)) {}

ReviewRecord parse_record_line(std::string_view line, std::size_t line_number,
                               const WarningSink& warn) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("not a JSON object: ") + e.what(), "", line_number);
  }
  if (!obj.is_object()) throw ValidationError("not a JSON object", "", line_number);

  ReviewRecord r;
  auto required = [&](std::string_view key) -> const json& {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
      throw ValidationError("missing field '" + std::string(key) + "'", std::string(key),
                            line_number);
    }
    return *it;
  };

  r.change_id = opaque_string(required("change_id"), "change_id", line_number);
  r.patch_id = opaque_string(required("patch_id"), "patch_id", line_number);
  r.file_path = opaque_string(required("file_path"), "file_path", line_number);
  r.comment = opaque_string(required("comment"), "comment", line_number);
  r.reviewer_id = opaque_string(required("reviewer_id"), "reviewer_id", line_number);
  r.project = opaque_string(required("project"), "project", line_number);

  const auto& ts = required("timestamp");
  if (!ts.is_string()) {
    throw ValidationError("field 'timestamp' must be an ISO-8601 string", "timestamp", line_number);
  }
  auto parsed = parse_timestamp(ts.get_ref<const std::string&>());
  if (!parsed) {
    throw ValidationError("unparseable timestamp '" + ts.get<std::string>() + "'", "timestamp",
                          line_number);
  }
  r.timestamp = *parsed;

  // File-level comments carry no line number.
  if (auto it = obj.find("line"); it != obj.end() && !it->is_null()) {
    if (it->is_number_unsigned()) {
      r.line = it->get<std::uint64_t>();
    } else if (it->is_string()) {
      const auto& s = it->get_ref<const std::string&>();
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), r.line);
      if (ec != std::errc{} || p != s.data() + s.size()) {
        throw ValidationError("field 'line' must be a non-negative integer", "line", line_number);
      }
    } else {
      throw ValidationError("field 'line' must be a non-negative integer", "line", line_number);
    }
  }

  if (warn) {
    for (const auto& [key, value] : obj.items()) {
      bool known = key == "line" || key == "timestamp" ||
                   std::find(std::begin(kStringFields), std::end(kStringFields), key) !=
                       std::end(kStringFields);
      if (!known) warn("line " + std::to_string(line_number) + ": ignoring unknown key '" + key + "'");
    }
  }

  try {
    validate_record(r);
  } catch (const ValidationError& e) {
    throw ValidationError(e.what(), e.field(), line_number);
  }
  return r;
}

std::string serialize_record(const ReviewRecord& record) {
  nlohmann::ordered_json obj;
  obj["change_id"] = record.change_id;
  obj["patch_id"] = record.patch_id;
  obj["file_path"] = record.file_path;
  obj["line"] = record.line;
  obj["comment"] = record.comment;
  obj["reviewer_id"] = record.reviewer_id;
  obj["timestamp"] = format_timestamp(record.timestamp);
  obj["project"] = record.project;
  return obj.dump();
}

std::vector<ReviewRecord> read_record_file(const std::filesystem::path& path,
                                           const WarningSink& warn) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open record file '" + path.string() + "'");

  std::vector<ReviewRecord> records;
  std::vector<RecordFileError::Issue> issues;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    try {
      records.push_back(parse_record_line(line, line_number, warn));
    } catch (const ValidationError& e) {
      issues.push_back({line_number, e.field(), e.what()});
    }
  }
  if (in.bad()) throw IoError("error reading record file '" + path.string() + "'");
  if (!issues.empty()) throw RecordFileError(std::move(issues));
  return records;
}

Corpus load_corpus(const std::filesystem::path& path, std::string_view project,
                   const WarningSink& warn) {
  auto records = read_record_file(path, warn);
  if (project.empty()) {
    std::set<std::string> projects;
    for (const auto& r : records) projects.insert(r.project);
    if (projects.size() > 1) {
      throw ValidationError("record file '" + path.string() + "' holds " +
                                std::to_string(projects.size()) +
                                " projects; select one explicitly",
                            "project");
    }
    if (records.empty()) throw EmptyCorpusError("record file '" + path.string() + "' is empty");
    std::string name = records.front().project;
    return Corpus(std::move(name), std::move(records));
  }
  std::erase_if(records, [&](const ReviewRecord& r) { return r.project != project; });
  if (records.empty()) {
    throw EmptyCorpusError("no records for project '" + std::string(project) + "' in '" +
                           path.string() + "'");
  }
  return Corpus(std::string(project), std::move(records));
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write record file '" + path.string() + "'");
  for (const auto& r : corpus.records()) out << serialize_record(r) << '\n';
  if (!out) throw IoError("error writing record file '" + path.string() + "'");
}

std::vector<Corpus> split_by_project(std::vector<ReviewRecord> records) {
  std::map<std::string, std::vector<ReviewRecord>> groups;
  for (auto& r : records) groups[r.project].push_back(std::move(r));
  std::vector<Corpus> out;
  out.reserve(groups.size());
  for (auto& [name, group] : groups) out.emplace_back(name, std::move(group));
  return out;
}

std::set<std::string> distinct_reviewers(const Corpus& corpus) {
  if (corpus.empty()) throw EmptyCorpusError("corpus '" + corpus.project() + "' is empty");
  std::set<std::string> out;
  for (const auto& r : corpus.records()) out.insert(r.reviewer_id);
  return out;
}

CorpusSummary summarize(const Corpus& corpus) {
  CorpusSummary s;
  s.project = corpus.project();
  s.records = corpus.size();
  s.reviewers = distinct_reviewers(corpus).size();
  std::set<std::string_view> files;
  for (const auto& r : corpus.records()) files.insert(r.file_path);
  s.files = files.size();
  s.first = corpus.records().front().timestamp;
  s.last = corpus.records().back().timestamp;
  return s;
}

}  // namespace revrec
