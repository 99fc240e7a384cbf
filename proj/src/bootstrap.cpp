#include "seqent/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "seqent/parallel.hpp"
#include "seqent/rng.hpp"

namespace seqent {

namespace {

void shuffle_states(std::vector<std::int32_t>& states, rng::SplitMix64& gen) {
  for (std::size_t i = states.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(gen.next_below(i + 1));
    std::swap(states[i], states[j]);
  }
}

double mi_from_models(const UnigramModel& unigram, const BigramModel& bigram,
                      const BootstrapOptions& options) {
  const double h2 = conditional_entropy(bigram);
  if (options.mode == EntropyMode::full) {
    const double mi = mutual_information(plugin_entropy(unigram), h2);
    if (!options.corrected) return mi;
    const BiasTerms terms = compute_bias_terms(unigram, bigram, options.bias_sample_size);
    return mi - terms.bias_mi;
  }
  const auto successors = bigram.successor_counts();
  const double h1_aligned = entropy_of_counts(successors, bigram.transition_total());
  const double mi = mutual_information(h1_aligned, h2);
  if (!options.corrected) return mi;
  // Aligned marginal and conditional share the transition sample, so the MI
  // bias uses the successor-marginal support count with the same n.
  const BiasTerms terms = compute_bias_terms(unigram, bigram, options.bias_sample_size);
  std::int64_t m_bar_aligned = 0;
  for (std::int64_t c : successors)
    if (c > 0) ++m_bar_aligned;
  return mi - bias_mi(m_bar_aligned, terms.m_bar_j, terms.n_h2);
}

double mi_of_states(std::span<const std::int32_t> states, std::int32_t alphabet_size,
                    const BootstrapOptions& options) {
  auto [unigram, bigram] = fit_models(states, alphabet_size);
  return mi_from_models(unigram, bigram, options);
}

}  // namespace

std::int64_t percentile_rank_low(std::int64_t replicates) {
  return (replicates + 39) / 40;  // ceil(0.025 R)
}

std::int64_t percentile_rank_high(std::int64_t replicates) {
  return (39 * replicates + 39) / 40;  // ceil(0.975 R)
}

ActivitySequence shuffle_sequence(const ActivitySequence& seq, std::uint64_t seed) {
  if (seq.size() < 2) throw SequenceTooShort("cannot shuffle a sequence shorter than 2");
  std::vector<std::int32_t> states = seq.states();
  rng::SplitMix64 gen(seed);
  shuffle_states(states, gen);
  // A permutation keeps the alphabet dense.
  return ActivitySequence::from_states(std::move(states), seq.user(), seq.kind());
}

double sequence_mi(const ActivitySequence& seq, const BootstrapOptions& options) {
  return mi_of_states(seq.states(), seq.alphabet_size(), options);
}

BootstrapResult bootstrap_mi_test(const ActivitySequence& seq, std::uint64_t seed,
                                  const BootstrapOptions& options) {
  if (seq.size() < 2) throw SequenceTooShort("bootstrap needs a sequence of length >= 2");
  const std::int64_t r = options.replicates;
  if (r < 40)
    throw InsufficientReplicates("need >= 40 replicates for 2.5/97.5 nearest-rank percentiles");

  BootstrapResult result;
  result.seed = seed;
  result.replicate_count = r;
  result.mi_true = sequence_mi(seq, options);

  result.replicates.assign(static_cast<std::size_t>(r), 0.0);
  const std::vector<std::int32_t>& original = seq.states();
  util::parallel_for(static_cast<std::size_t>(r), [&](std::size_t k) {
    std::vector<std::int32_t> states = original;
    rng::SplitMix64 gen(rng::derive_seed(seed, k));
    shuffle_states(states, gen);
    result.replicates[k] = mi_of_states(states, seq.alphabet_size(), options);
  });

  std::vector<double> sorted = result.replicates;
  std::sort(sorted.begin(), sorted.end());
  result.p025 = sorted[static_cast<std::size_t>(percentile_rank_low(r) - 1)];
  result.p975 = sorted[static_cast<std::size_t>(percentile_rank_high(r) - 1)];
  result.reject_null = result.mi_true > result.p975;
  result.gap = result.mi_true - result.p975;
  return result;
}

double gap_statistic(const BootstrapResult& result) {
  return result.mi_true - result.p975;
}

namespace {

struct SampleMoments {
  double mean = 0.0;
  double sum_sq_dev = 0.0;
  std::int64_t n = 0;
};

SampleMoments moments(std::span<const double> xs) {
  SampleMoments m;
  m.n = static_cast<std::int64_t>(xs.size());
  if (m.n == 0) return m;
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / static_cast<double>(m.n);
  for (double x : xs) m.sum_sq_dev += (x - m.mean) * (x - m.mean);
  return m;
}

}  // namespace

TTestResult t_test(std::span<const double> a, std::span<const double> b, TTestKind kind) {
  if (a.size() < 2 || b.size() < 2)
    throw InvalidCount("t-test requires at least two observations per sample");
  const SampleMoments ma = moments(a);
  const SampleMoments mb = moments(b);

  TTestResult result;
  result.mean_a = ma.mean;
  result.mean_b = mb.mean;
  result.n_a = ma.n;
  result.n_b = mb.n;

  const auto na = static_cast<double>(ma.n);
  const auto nb = static_cast<double>(mb.n);
  if (kind == TTestKind::pooled) {
    result.df = na + nb - 2.0;
    const double pooled_var = (ma.sum_sq_dev + mb.sum_sq_dev) / result.df;
    if (pooled_var <= 0.0) throw DegenerateVariance("pooled variance is zero");
    result.t_stat = (ma.mean - mb.mean) / std::sqrt(pooled_var * (1.0 / na + 1.0 / nb));
  } else {
    const double va = ma.sum_sq_dev / (na - 1.0);
    const double vb = mb.sum_sq_dev / (nb - 1.0);
    const double se2 = va / na + vb / nb;
    if (se2 <= 0.0) throw DegenerateVariance("both samples have zero variance");
    result.t_stat = (ma.mean - mb.mean) / std::sqrt(se2);
    result.df = se2 * se2 /
                (va * va / (na * na * (na - 1.0)) + vb * vb / (nb * nb * (nb - 1.0)));
  }
  result.p_value = student_t_two_sided_p(result.t_stat, result.df);
  return result;
}

GroupComparison compare_groups(std::span<const double> gaps_individual,
                               std::span<const double> gaps_group, int histogram_bins,
                               double alpha) {
  GroupComparison cmp;
  cmp.alpha = alpha;
  cmp.ttest = pooled_t_test(gaps_individual, gaps_group);
  cmp.reject_equal_means = cmp.ttest.p_value < alpha;

  // Shared binning so the two densities are directly comparable.
  std::vector<double> combined(gaps_individual.begin(), gaps_individual.end());
  combined.insert(combined.end(), gaps_group.begin(), gaps_group.end());
  const auto [min_it, max_it] = std::minmax_element(combined.begin(), combined.end());
  double lo = *min_it;
  double hi = *max_it;
  if (!(hi > lo)) hi = lo + 1.0;
  cmp.individual_hist = make_histogram(gaps_individual, lo, hi, histogram_bins);
  cmp.group_hist = make_histogram(gaps_group, lo, hi, histogram_bins);
  return cmp;
}

}  // namespace seqent
