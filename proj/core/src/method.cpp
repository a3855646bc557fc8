#include "revrec/method.hpp"

#include "revrec/errors.hpp"

namespace revrec {

namespace {

constexpr std::array<std::string_view, 4> kNames = {"FP_JC", "FP_HD", "RC_CS", "RC_JC"};

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view method_name(Method m) { return kNames[static_cast<std::size_t>(m)]; }

std::optional<Method> parse_method(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Method>(i);
  }
  return std::nullopt;
}

MethodSet::MethodSet(std::initializer_list<Method> methods) {
  for (Method m : methods) insert(m);
}

std::vector<Method> MethodSet::methods() const {
  std::vector<Method> out;
  for (Method m : kAllMethods) {
    if (contains(m)) out.push_back(m);
  }
  return out;
}

std::string MethodSet::name() const {
  std::string out;
  for (Method m : methods()) {
    if (!out.empty()) out += '+';
    out += method_name(m);
  }
  return out;
}

std::string MethodSelection::name() const { return revfinder_ ? "REVFINDER" : methods_.name(); }

MethodSelection parse_method_selection(std::string_view text) {
  text = strip(text);
  if (text.empty()) throw ConfigError("empty method selection");
  if (text == "REVFINDER") return MethodSelection::revfinder();

  MethodSet set;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = strip(text.substr(start, end - start));
    auto m = parse_method(token);
    if (!m) {
      throw ConfigError("unknown method '" + std::string(token) +
                        "' (expected FP_JC, FP_HD, RC_CS, RC_JC or REVFINDER)");
    }
    if (set.contains(*m)) throw ConfigError("method '" + std::string(token) + "' listed twice");
    set.insert(*m);
    start = end + 1;
  }
  return MethodSelection::combination(set);
}

std::vector<MethodSelection> parse_method_list(std::string_view text) {
  std::vector<MethodSelection> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto selection = parse_method_selection(text.substr(start, end - start));
    for (const auto& existing : out) {
      if (existing == selection) throw ConfigError("selection '" + selection.name() + "' repeated");
    }
    out.push_back(selection);
    start = end + 1;
  }
  return out;
}

std::vector<MethodSelection> all_combinations() {
  using enum Method;
  const std::vector<MethodSet> sets = {
      {kFilePathJaccard},
      {kFilePathHamming},
      {kCommentCosine},
      {kCommentJaccard},
      {kFilePathJaccard, kFilePathHamming},
      {kFilePathJaccard, kCommentCosine},
      {kFilePathJaccard, kCommentJaccard},
      {kFilePathHamming, kCommentCosine},
      {kFilePathHamming, kCommentJaccard},
      {kCommentCosine, kCommentJaccard},
      {kFilePathHamming, kCommentCosine, kCommentJaccard},
      {kFilePathJaccard, kCommentCosine, kCommentJaccard},
      {kFilePathJaccard, kFilePathHamming, kCommentJaccard},
      {kFilePathJaccard, kFilePathHamming, kCommentCosine},
      {kFilePathJaccard, kFilePathHamming, kCommentCosine, kCommentJaccard},
  };
  std::vector<MethodSelection> out;
  for (const auto& s : sets) out.push_back(MethodSelection::combination(s));
  return out;
}

}  // namespace revrec
