#ifndef SEQENT_TESTS_HELPERS_HPP
#define SEQENT_TESTS_HELPERS_HPP

#include <cmath>
#include <vector>

#include "seqent/rng.hpp"
#include "seqent/types.hpp"

namespace test_helpers {

inline seqent::ActivitySequence seq_of(const std::vector<int>& labels) {
  return seqent::ActivitySequence::relabeled(labels);
}

/// Random label vector of length n over an alphabet of at most m symbols.
inline std::vector<int> random_labels(seqent::rng::SplitMix64& gen, std::int64_t n,
                                      int m) {
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    labels.push_back(static_cast<int>(gen.next_below(static_cast<std::uint64_t>(m))));
  return labels;
}

inline bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace test_helpers

#endif  // SEQENT_TESTS_HELPERS_HPP
