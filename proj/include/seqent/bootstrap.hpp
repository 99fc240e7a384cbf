#ifndef SEQENT_BOOTSTRAP_HPP
#define SEQENT_BOOTSTRAP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "seqent/bias.hpp"
#include "seqent/entropy.hpp"
#include "seqent/stats.hpp"
#include "seqent/types.hpp"

namespace seqent {

struct BootstrapOptions {
  std::int64_t replicates = 1000;
  bool corrected = true;
  EntropyMode mode = EntropyMode::full;
  BiasSampleSize bias_sample_size = BiasSampleSize::per_estimator;
};

/// Outcome of the permutation test: the observed MI against the percentile
/// band of MI under random reorderings of the same multiset of states.
struct BootstrapResult {
  double mi_true = 0.0;
  std::vector<double> replicates;  // in replicate-index order
  double p025 = 0.0;
  double p975 = 0.0;
  bool reject_null = false;  // mi_true > p975 (one-sided, nominal 2.5%)
  double gap = 0.0;          // mi_true - p975
  std::uint64_t seed = 0;
  std::int64_t replicate_count = 0;
};

/// 1-based nearest-rank positions of the 2.5th and 97.5th percentiles,
/// ceil(R/40) and ceil(39R/40), computed in integer arithmetic.
std::int64_t percentile_rank_low(std::int64_t replicates);
std::int64_t percentile_rank_high(std::int64_t replicates);

/// Uniform random permutation (Fisher-Yates) of the states; the multiset of
/// states, the alphabet, user and kind are preserved. Deterministic per seed.
ActivitySequence shuffle_sequence(const ActivitySequence& seq, std::uint64_t seed);

/// The MI value the bootstrap compares: full or aligned marginal, optionally
/// bias-corrected.
double sequence_mi(const ActivitySequence& seq, const BootstrapOptions& options = {});

/// Permutation bootstrap of the mutual information. Replicate k is the MI of
/// an independently shuffled copy seeded with derive_seed(seed, k); the
/// percentile band is taken by nearest rank on the sorted replicates.
/// Replicates are evaluated in parallel when hardware allows; results are
/// assembled in replicate-index order so output depends only on the seed.
BootstrapResult bootstrap_mi_test(const ActivitySequence& seq, std::uint64_t seed,
                                  const BootstrapOptions& options = {});

/// G = mi_true - p975, the length-comparable strength of the sequential
/// signal above the shuffle band.
double gap_statistic(const BootstrapResult& result);

struct TTestResult {
  double t_stat = 0.0;
  double df = 0.0;
  double p_value = 1.0;  // two-sided
  double mean_a = 0.0;
  double mean_b = 0.0;
  std::int64_t n_a = 0;
  std::int64_t n_b = 0;
};

enum class TTestKind { pooled, welch };

/// Two-sample t-test. The pooled variant assumes equal variances with
/// df = n_a + n_b - 2; welch uses the Satterthwaite approximation. Throws
/// DegenerateVariance when both samples are constant.
TTestResult t_test(std::span<const double> a, std::span<const double> b,
                   TTestKind kind = TTestKind::pooled);

inline TTestResult pooled_t_test(std::span<const double> a, std::span<const double> b) {
  return t_test(a, b, TTestKind::pooled);
}

struct GroupComparison {
  TTestResult ttest;
  double alpha = 0.05;
  bool reject_equal_means = false;
  Histogram individual_hist;
  Histogram group_hist;
};

/// Pooled t-test of the two gap populations plus shared-range histograms for
/// plotting their densities.
GroupComparison compare_groups(std::span<const double> gaps_individual,
                               std::span<const double> gaps_group,
                               int histogram_bins = 20, double alpha = 0.05);

}  // namespace seqent

#endif  // SEQENT_BOOTSTRAP_HPP
