#include "revrec/textprep.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "revrec/errors.hpp"

namespace revrec {

namespace detail {
extern const std::string_view kBundledStopWords;
}

namespace {

bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
  return out;
}

}  // namespace

StopWordList StopWordList::parse(std::string_view text) {
  StopWordList list;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;

    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    list.words_.insert(lowercase(line.substr(b, e - b + 1)));
  }
  return list;
}

StopWordList StopWordList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stop-word list '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const StopWordList& StopWordList::bundled() {
  static const StopWordList list = parse(detail::kBundledStopWords);
  return list;
}

bool StopWordList::contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

TokenList preprocess_comment(std::string_view text, const StopWordList& stop_words) {
  TokenList out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_ascii_alnum(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    bool all_digits = true;
    while (j < text.size() && is_ascii_alnum(text[j])) {
      all_digits = all_digits && (text[j] >= '0' && text[j] <= '9');
      ++j;
    }
    if (!all_digits) {
      std::string token = lowercase(text.substr(i, j - i));
      if (!stop_words.contains(token)) out.push_back(std::move(token));
    }
    i = j;
  }
  return out;
}

PathTokenSet tokenize_path(std::string_view path) {
  if (path.empty()) throw ValidationError("file path is empty", "file_path");
  PathTokenSet out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= path.size(); ++i) {
    bool boundary = i == path.size() || path[i] == '/' || path[i] == '.' || path[i] == '_' ||
                    path[i] == '-';
    if (!boundary) continue;
    if (i > start) out.insert(lowercase(path.substr(start, i - start)));
    start = i + 1;
  }
  if (out.empty()) {
    throw ValidationError("file path '" + std::string(path) + "' has no tokens", "file_path");
  }
  return out;
}

}  // namespace revrec
