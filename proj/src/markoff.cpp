#include "seqent/markoff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "seqent/rng.hpp"

namespace seqent {

ActivitySequence mark_off(const ActivitySequence& seq, double rate, std::uint64_t seed) {
  if (!(rate >= 0.0) || !(rate < 1.0))
    throw InvalidCount("mark-off rate must lie in [0, 1)");
  const std::int64_t n = seq.size();
  const auto retained =
      static_cast<std::int64_t>(std::llround((1.0 - rate) * static_cast<double>(n)));
  if (retained < 2)
    throw TooFewRemaining("mark-off would leave fewer than 2 observations");
  if (retained == n) return seq;

  // Partial Fisher-Yates selection of a uniform k-subset of positions.
  std::vector<std::int64_t> positions(static_cast<std::size_t>(n));
  std::iota(positions.begin(), positions.end(), 0);
  rng::SplitMix64 gen(seed);
  for (std::int64_t i = 0; i < retained; ++i) {
    const auto j = i + static_cast<std::int64_t>(
                           gen.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(positions[static_cast<std::size_t>(i)], positions[static_cast<std::size_t>(j)]);
  }
  positions.resize(static_cast<std::size_t>(retained));
  std::sort(positions.begin(), positions.end());

  std::vector<int> kept;
  kept.reserve(positions.size());
  for (std::int64_t pos : positions)
    kept.push_back(seq.states()[static_cast<std::size_t>(pos)]);
  return ActivitySequence::relabeled(kept, seq.user(), seq.kind());
}

std::vector<double> default_markoff_rates() {
  std::vector<double> rates;
  rates.reserve(10);
  for (int i = 0; i < 10; ++i) rates.push_back(static_cast<double>(i) / 10.0);
  return rates;
}

MarkoffProfile markoff_sweep(const ActivitySequence& seq, std::span<const double> rates,
                             std::uint64_t seed, const BootstrapOptions& options) {
  if (rates.empty()) throw InvalidCount("mark-off sweep needs at least one rate");
  for (std::size_t i = 1; i < rates.size(); ++i)
    if (!(rates[i] > rates[i - 1]))
      throw InvalidCount("mark-off rates must be strictly increasing");

  MarkoffProfile profile;
  profile.entries.reserve(rates.size());
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const std::uint64_t stage_seed = rng::derive_seed(seed, i);
    MarkoffEntry entry;
    entry.rate = rates[i];
    ActivitySequence kept = mark_off(seq, rates[i], rng::derive_seed(stage_seed, 0));
    entry.retained_n = kept.size();
    entry.bootstrap = bootstrap_mi_test(kept, rng::derive_seed(stage_seed, 1), options);
    if (!entry.bootstrap.reject_null && !profile.critical_rate)
      profile.critical_rate = entry.rate;
    profile.entries.push_back(std::move(entry));
  }
  return profile;
}

}  // namespace seqent
