#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "revrec/corpus.hpp"
#include "revrec/textprep.hpp"

namespace revrec {

// Word -> dense vector map. Vectors are stored row-major in one buffer.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return words_.size(); }

  // Returns false (and leaves the table unchanged) if `word` is already
  // present. Throws ValidationError on a wrong length or non-finite value.
  bool insert(std::string word, std::span<const float> vector);

  // Empty optional for out-of-vocabulary words.
  std::optional<std::span<const float>> find(std::string_view word) const;

  // Words in insertion order.
  const std::vector<std::string>& words() const noexcept { return words_; }

  friend bool operator==(const EmbeddingTable&, const EmbeddingTable&) = default;

 private:
  std::size_t dimension_;
  std::vector<std::string> words_;
  std::vector<float> values_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Text vector format: "<count> <dimension>" header, then one
// "<word> <f1> ... <fd>" line per entry. Words are lowercased; a repeated
// word keeps its first vector and triggers a warning. Throws IoError or
// FormatError (with the 1-based line number).
EmbeddingTable load_embedding_table(const std::filesystem::path& path,
                                    const WarningSink& warn = {});
EmbeddingTable parse_embedding_table(std::string_view text, const WarningSink& warn = {});

// Writes floats with enough digits to round-trip exactly.
void save_embedding_table(const EmbeddingTable& table, const std::filesystem::path& path);

struct CommentVector {
  std::vector<double> values;
  double token_coverage = 0.0;  // in-vocabulary tokens / all tokens
};

// Mean of the in-vocabulary token vectors (repeated tokens count every
// time). Zero vector with coverage 0 when nothing is in vocabulary.
CommentVector comment_vector(const TokenList& tokens, const EmbeddingTable& table);

}  // namespace revrec
