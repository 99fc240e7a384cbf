#ifndef SEQENT_MARKOFF_HPP
#define SEQENT_MARKOFF_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seqent/bootstrap.hpp"
#include "seqent/types.hpp"

namespace seqent {

struct MarkoffEntry {
  double rate = 0.0;
  std::int64_t retained_n = 0;
  BootstrapResult bootstrap;
};

struct MarkoffProfile {
  std::vector<MarkoffEntry> entries;
  /// Smallest tested rate at which the bootstrap stops rejecting, if any.
  std::optional<double> critical_rate;
};

/// Hides a random fraction of the observations: a uniformly random subset of
/// exactly round((1-rate)*n) positions is retained in original order, and the
/// surviving states are recompacted (numeric order) in case a state vanished.
/// Deterministic per seed. Throws TooFewRemaining if fewer than 2 positions
/// survive, InvalidCount if rate is outside [0, 1).
ActivitySequence mark_off(const ActivitySequence& seq, double rate, std::uint64_t seed);

/// 0.0, 0.1, ..., 0.9.
std::vector<double> default_markoff_rates();

/// For each rate r_i (strictly increasing, each in [0, 1)): mark off with
/// seed derive_seed(derive_seed(seed, i), 0), then bootstrap the retained
/// subsequence with seed derive_seed(derive_seed(seed, i), 1).
MarkoffProfile markoff_sweep(const ActivitySequence& seq, std::span<const double> rates,
                             std::uint64_t seed, const BootstrapOptions& options = {});

}  // namespace seqent

#endif  // SEQENT_MARKOFF_HPP
