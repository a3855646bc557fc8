#include "revrec/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "revrec/errors.hpp"

namespace revrec {

double jaccard(const TokenSet& x, const TokenSet& y) {
  if (x.empty() && y.empty()) return 1.0;
  if (x.empty() || y.empty()) return 0.0;
  std::size_t common = 0;
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() && b != y.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++common;
      ++a;
      ++b;
    }
  }
  return static_cast<double>(common) / static_cast<double>(x.size() + y.size() - common);
}

double adapted_hamming_similarity(std::string_view p, std::string_view q) {
  if (p.empty() || q.empty()) throw ValidationError("file path is empty", "file_path");
  if (p == q) return 1.0;
  const std::size_t shorter = std::min(p.size(), q.size());
  std::size_t distance = std::max(p.size(), q.size()) - shorter;
  for (std::size_t i = 0; i < shorter; ++i) {
    if (p[i] != q[i]) ++distance;
  }
  return 1.0 / static_cast<double>(distance);
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw ValidationError("cosine of vectors with lengths " + std::to_string(u.size()) + " and " +
                              std::to_string(v.size()),
                          "vector");
  }
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), 0.0, 1.0);
}

}  // namespace revrec
