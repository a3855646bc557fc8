#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revrec {

// The four similarity methods, in their canonical order.
enum class Method : std::uint8_t {
  kFilePathJaccard,      // FP_JC
  kFilePathHamming,      // FP_HD
  kCommentCosine,        // RC_CS
  kCommentJaccard,       // RC_JC
};

inline constexpr std::array<Method, 4> kAllMethods = {
    Method::kFilePathJaccard, Method::kFilePathHamming, Method::kCommentCosine,
    Method::kCommentJaccard};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

// A set of methods whose normalized scores are averaged. May be empty;
// recommend() rejects empty sets.
class MethodSet {
 public:
  MethodSet() = default;
  MethodSet(std::initializer_list<Method> methods);

  void insert(Method m) { bits_.set(static_cast<std::size_t>(m)); }
  bool contains(Method m) const { return bits_.test(static_cast<std::size_t>(m)); }
  bool empty() const { return bits_.none(); }
  std::size_t size() const { return bits_.count(); }

  // Canonical order.
  std::vector<Method> methods() const;

  // '+'-joined names in canonical order, e.g. "FP_JC+RC_JC".
  std::string name() const;

  friend bool operator==(const MethodSet&, const MethodSet&) = default;

 private:
  std::bitset<4> bits_;
};

// One row of an evaluation: a method combination or the RevFinder baseline.
class MethodSelection {
 public:
  static MethodSelection combination(MethodSet methods) { return MethodSelection(methods, false); }
  static MethodSelection revfinder() { return MethodSelection({}, true); }

  bool is_revfinder() const noexcept { return revfinder_; }
  const MethodSet& methods() const noexcept { return methods_; }
  bool needs_embeddings() const { return methods_.contains(Method::kCommentCosine); }

  // "REVFINDER" or the method-set name.
  std::string name() const;

  friend bool operator==(const MethodSelection&, const MethodSelection&) = default;

 private:
  MethodSelection(MethodSet methods, bool revfinder) : methods_(methods), revfinder_(revfinder) {}

  MethodSet methods_;
  bool revfinder_ = false;
};

// "FP_JC+FP_HD" or "REVFINDER". Whitespace around identifiers is ignored.
// Throws ConfigError on unknown or repeated identifiers and empty input.
MethodSelection parse_method_selection(std::string_view text);

// Comma-separated selections, e.g. "FP_JC+FP_HD+RC_JC,REVFINDER".
std::vector<MethodSelection> parse_method_list(std::string_view text);

// All 15 non-empty combinations: singles, pairs, triples, then all four.
std::vector<MethodSelection> all_combinations();

}  // namespace revrec
