#include "revrec/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "revrec/errors.hpp"

namespace revrec {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view field, T& out) {
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc{} && p == field.data() + field.size();
}

}  // namespace

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw ValidationError("embedding dimension must be positive", "dimension");
}

bool EmbeddingTable::insert(std::string word, std::span<const float> vector) {
  if (vector.size() != dimension_) {
    throw ValidationError("vector for '" + word + "' has " + std::to_string(vector.size()) +
                              " components, expected " + std::to_string(dimension_),
                          "dimension");
  }
  if (!std::all_of(vector.begin(), vector.end(), [](float v) { return std::isfinite(v); })) {
    throw ValidationError("vector for '" + word + "' has a non-finite component", "vector");
  }
  if (index_.contains(word)) return false;
  index_.emplace(word, words_.size());
  words_.push_back(std::move(word));
  values_.insert(values_.end(), vector.begin(), vector.end());
  return true;
}

std::optional<std::span<const float>> EmbeddingTable::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return std::span<const float>(values_).subspan(it->second * dimension_, dimension_);
}

EmbeddingTable parse_embedding_table(std::string_view text, const WarningSink& warn) {
  std::size_t pos = 0;
  std::size_t line_number = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= text.size()) return false;
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    return true;
  };

  std::string_view line;
  if (!next_line(line)) throw FormatError("embedding file is empty", 1);
  auto header = split_fields(line);
  std::size_t count = 0;
  std::size_t dimension = 0;
  if (header.size() != 2 || !parse_number(header[0], count) || !parse_number(header[1], dimension) ||
      dimension == 0) {
    throw FormatError("expected header '<count> <dimension>'", line_number);
  }

  EmbeddingTable table(dimension);
  std::vector<float> row(dimension);
  std::size_t rows = 0;
  while (next_line(line)) {
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != dimension + 1) {
      throw FormatError("expected a word and " + std::to_string(dimension) + " values, got " +
                            std::to_string(fields.size() - 1) + " values",
                        line_number);
    }
    for (std::size_t i = 0; i < dimension; ++i) {
      if (!parse_number(fields[i + 1], row[i]) || !std::isfinite(row[i])) {
        throw FormatError("invalid value '" + std::string(fields[i + 1]) + "'", line_number);
      }
    }
    std::string word(fields[0]);
    std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    ++rows;
    if (!table.insert(word, row) && warn) {
      warn("line " + std::to_string(line_number) + ": duplicate word '" + word +
           "', keeping first vector");
    }
  }
  if (rows != count) {
    throw FormatError("header announces " + std::to_string(count) + " vectors, found " +
                          std::to_string(rows),
                      line_number);
  }
  return table;
}

EmbeddingTable load_embedding_table(const std::filesystem::path& path, const WarningSink& warn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embedding file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading embedding file '" + path.string() + "'");
  return parse_embedding_table(buf.str(), warn);
}

void save_embedding_table(const EmbeddingTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write embedding file '" + path.string() + "'");
  out << table.size() << ' ' << table.dimension() << '\n';
  char buf[64];
  for (const auto& word : table.words()) {
    out << word;
    const auto vec = table.find(word);  // keep the optional alive for the loop
    for (float v : *vec) {
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(p - buf));
    }
    out << '\n';
  }
  if (!out) throw IoError("error writing embedding file '" + path.string() + "'");
}

CommentVector comment_vector(const TokenList& tokens, const EmbeddingTable& table) {
  CommentVector out;
  out.values.assign(table.dimension(), 0.0);
  std::size_t found = 0;
  for (const auto& token : tokens) {
    auto vec = table.find(token);
    if (!vec) continue;
    ++found;
    for (std::size_t i = 0; i < vec->size(); ++i) out.values[i] += (*vec)[i];
  }
  if (found == 0) return out;
  for (auto& v : out.values) v /= static_cast<double>(found);
  out.token_coverage = static_cast<double>(found) / static_cast<double>(tokens.size());
  return out;
}

}  // namespace revrec
