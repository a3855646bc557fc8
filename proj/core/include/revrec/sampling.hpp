#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace revrec {

// Uniform integer in [0, bound) from a 64-bit engine. Unlike
// std::uniform_int_distribution the result is identical on every standard
// library, so a seed pins the sample everywhere.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound);

// `count` distinct indices from [0, n), chosen uniformly by a partial
// Fisher-Yates shuffle, returned in ascending order.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t count,
                                                    std::uint64_t seed);

// ceil(fraction * n), robust to representation error (0.1 * 20 is 2).
std::size_t fraction_count(double fraction, std::size_t n);

struct FixedSplit {
  std::vector<std::size_t> test;     // ascending
  std::vector<std::size_t> history;  // ascending
};

// Random held-out split of n records. Throws CorpusTooSmallError when either
// side would be empty.
FixedSplit fixed_split(std::size_t n, double test_fraction, std::uint64_t seed);

// Step i covers chunk [chunk_begin, chunk_end); its validation set is the last
// fraction_count(fraction, chunk size) records of the chunk and its history
// is everything before the validation set.
struct IncrementalStep {
  std::size_t chunk_begin = 0;
  std::size_t validation_begin = 0;
  std::size_t chunk_end = 0;

  std::size_t history_size() const { return validation_begin; }
  std::size_t validation_size() const { return chunk_end - validation_begin; }
};

// Chunk i (1-based) ends at floor(i * n / steps). Throws CorpusTooSmallError
// when n < 2 * steps or a step would have an empty history or validation set.
std::vector<IncrementalStep> incremental_steps(std::size_t n, std::size_t steps,
                                               double validation_fraction);

}  // namespace revrec
