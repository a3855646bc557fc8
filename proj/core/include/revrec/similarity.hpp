#pragma once

#include <span>
#include <string_view>

#include "revrec/textprep.hpp"

namespace revrec {

// All kernels return a value in [0, 1].

// |x ∩ y| / |x ∪ y|. Two empty sets score 1, exactly one empty set scores 0.
double jaccard(const TokenSet& x, const TokenSet& y);

// 1 for identical paths. Otherwise 1/d where d is the number of mismatching
// bytes over the common (left-aligned) length plus the length difference.
// Note that d == 1 gives 1 for paths that differ in a single position.
// Throws ValidationError on an empty path.
double adapted_hamming_similarity(std::string_view p, std::string_view q);

// u·v / (|u||v|), clamped to [0, 1]; 0 if either norm is zero. Throws
// ValidationError when the lengths differ.
double cosine(std::span<const double> u, std::span<const double> v);

}  // namespace revrec
