#ifndef SEQENT_BIAS_HPP
#define SEQENT_BIAS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "seqent/entropy.hpp"
#include "seqent/types.hpp"

namespace seqent {

/// Which observation count feeds each leading-order bias term.
///   per_estimator: the marginal-entropy term uses n, the conditional term
///                  (and the MI term) uses the transition count n-1, so each
///                  bias scales with its own sample size. Default.
///   shared_n:      all terms use n. The two differ at O(1/n^2).
enum class BiasSampleSize { per_estimator, shared_n };

/// Leading-order finite-sampling bias terms, in bits. The entropy biases are
/// nonpositive (plug-in entropy underestimates); the MI bias is their excess
/// and can take either sign.
struct BiasTerms {
  double bias_h1 = 0.0;
  double bias_h2 = 0.0;
  double bias_mi = 0.0;
  std::int64_t m_bar = 0;                // states with nonzero probability
  std::vector<std::int64_t> m_bar_j;     // distinct successors per observed context
  std::int64_t n_h1 = 0;
  std::int64_t n_h2 = 0;
};

/// -(m_bar - 1) / (2 n ln 2). Throws InvalidCount if n < 1 or m_bar < 1.
double bias_h1(std::int64_t m_bar, std::int64_t n);

/// -sum_j (m_bar_j - 1) / (2 n ln 2) over observed contexts only.
double bias_h2(std::span<const std::int64_t> m_bar_j, std::int64_t n);

/// (sum_j (m_bar_j - 1) - (m_bar - 1)) / (2 n ln 2), the numerator taken in
/// exact integer arithmetic before the single division.
double bias_mi(std::int64_t m_bar, std::span<const std::int64_t> m_bar_j,
               std::int64_t n);

BiasTerms compute_bias_terms(const UnigramModel& unigram, const BigramModel& bigram,
                             BiasSampleSize sample_size = BiasSampleSize::per_estimator);

/// Fills report.corrected with h1 - bias_h1, h2 - bias_h2, mi - bias_mi.
/// No clamping by default; clamp_for_display restricts corrected MI to
/// [0, corrected h1] for plotting. Throws MismatchedProvenance when the
/// terms' observation counts do not match the report's.
EntropyReport apply_correction(EntropyReport report, const BiasTerms& terms,
                               bool clamp_for_display = false);

/// entropy_report + compute_bias_terms + apply_correction in one call.
EntropyReport analyze_sequence(const ActivitySequence& seq,
                               BiasSampleSize sample_size = BiasSampleSize::per_estimator,
                               bool clamp_for_display = false);

}  // namespace seqent

#endif  // SEQENT_BIAS_HPP
