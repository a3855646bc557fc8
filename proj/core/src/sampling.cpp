#include "revrec/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "revrec/errors.hpp"

namespace revrec {

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  // Reject the incomplete top bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t count,
                                                    std::uint64_t seed) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::mt19937_64 engine(seed);
  count = std::min(count, n);
  for (std::size_t i = 0; i < count; ++i) {
    auto j = i + static_cast<std::size_t>(uniform_below(engine, n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::size_t fraction_count(double fraction, std::size_t n) {
  return static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
}

FixedSplit fixed_split(std::size_t n, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ConfigError("test fraction must lie in (0, 1)");
  }
  auto valid = [&](std::size_t size) {
    std::size_t t = fraction_count(test_fraction, size);
    return t >= 1 && t < size;
  };
  if (!valid(n)) {
    std::size_t minimum = 2;
    while (!valid(minimum)) ++minimum;
    throw CorpusTooSmallError("fixed sampling with test fraction " + std::to_string(test_fraction) +
                                  " needs at least " + std::to_string(minimum) +
                                  " records, corpus has " + std::to_string(n),
                              minimum);
  }
  FixedSplit split;
  split.test = sample_without_replacement(n, fraction_count(test_fraction, n), seed);
  split.history.reserve(n - split.test.size());
  auto t = split.test.begin();
  for (std::size_t i = 0; i < n; ++i) {
    if (t != split.test.end() && *t == i) {
      ++t;
    } else {
      split.history.push_back(i);
    }
  }
  return split;
}

std::vector<IncrementalStep> incremental_steps(std::size_t n, std::size_t steps,
                                               double validation_fraction) {
  if (steps == 0) throw ConfigError("step count must be positive");
  if (!(validation_fraction > 0.0 && validation_fraction < 1.0)) {
    throw ConfigError("validation fraction must lie in (0, 1)");
  }
  auto build = [&](std::size_t size) {
    std::vector<IncrementalStep> out;
    for (std::size_t i = 1; i <= steps; ++i) {
      IncrementalStep step;
      step.chunk_begin = (i - 1) * size / steps;
      step.chunk_end = i * size / steps;
      std::size_t chunk = step.chunk_end - step.chunk_begin;
      step.validation_begin = step.chunk_end - std::min(chunk, fraction_count(validation_fraction, chunk));
      out.push_back(step);
    }
    return out;
  };
  auto valid = [&](std::size_t size) {
    if (size < 2 * steps) return false;
    for (const auto& s : build(size)) {
      if (s.validation_size() == 0 || s.history_size() == 0) return false;
    }
    return true;
  };
  if (!valid(n)) {
    std::size_t minimum = 2 * steps;
    while (!valid(minimum)) ++minimum;
    throw CorpusTooSmallError("incremental sampling with " + std::to_string(steps) +
                                  " steps needs at least " + std::to_string(minimum) +
                                  " records, corpus has " + std::to_string(n),
                              minimum);
  }
  return build(n);
}

}  // namespace revrec
