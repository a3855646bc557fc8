#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace revrec {

// Ordered lowercase word tokens of a review comment.
using TokenList = std::vector<std::string>;

// Token set used by the Jaccard kernels. Sorted, so iteration is
// deterministic.
using TokenSet = std::set<std::string>;

// Lowercase tokens of a file path.
using PathTokenSet = TokenSet;

class StopWordList {
 public:
  StopWordList() = default;

  // One word per line; blank lines and '#' comments are skipped. Words are
  // lowercased.
  static StopWordList parse(std::string_view text);
  static StopWordList load(const std::filesystem::path& path);

  // The list shipped in core/data/stopwords.txt.
  static const StopWordList& bundled();

  // `word` must already be lowercase.
  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Tokenizes on maximal runs of ASCII alphanumerics, drops pure-digit tokens,
// drops stop words, lowercases. Every other byte (punctuation, symbols,
// non-ASCII) is a boundary.
TokenList preprocess_comment(std::string_view text,
                             const StopWordList& stop_words = StopWordList::bundled());

// Splits on '/', then on '.', '_' and '-', lowercases. Throws ValidationError
// for an empty path or one that yields no tokens.
PathTokenSet tokenize_path(std::string_view path);

inline TokenSet to_set(const TokenList& tokens) { return {tokens.begin(), tokens.end()}; }

}  // namespace revrec
