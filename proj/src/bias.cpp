#include "seqent/bias.hpp"

#include <algorithm>
#include <numbers>

namespace seqent {

namespace {

// Denominator 2 n ln 2, built as (2*n)*ln2 so that doubling n exactly
// doubles the denominator (and halves the term) in floating point.
double bias_denominator(std::int64_t n) {
  if (n < 1) throw InvalidCount("bias terms require n >= 1");
  return (2.0 * static_cast<double>(n)) * std::numbers::ln2;
}

std::int64_t checked_excess(std::int64_t m_bar) {
  if (m_bar < 1) throw InvalidCount("observed state count must be >= 1");
  return m_bar - 1;
}

}  // namespace

double bias_h1(std::int64_t m_bar, std::int64_t n) {
  return -static_cast<double>(checked_excess(m_bar)) / bias_denominator(n);
}

double bias_h2(std::span<const std::int64_t> m_bar_j, std::int64_t n) {
  std::int64_t excess = 0;
  for (std::int64_t m : m_bar_j) excess += checked_excess(m);
  return -static_cast<double>(excess) / bias_denominator(n);
}

double bias_mi(std::int64_t m_bar, std::span<const std::int64_t> m_bar_j,
               std::int64_t n) {
  std::int64_t excess = -checked_excess(m_bar);
  for (std::int64_t m : m_bar_j) excess += checked_excess(m);
  return static_cast<double>(excess) / bias_denominator(n);
}

BiasTerms compute_bias_terms(const UnigramModel& unigram, const BigramModel& bigram,
                             BiasSampleSize sample_size) {
  BiasTerms terms;
  terms.m_bar = unigram.distinct_observed();
  for (std::int32_t j = 0; j < bigram.alphabet_size(); ++j)
    if (bigram.context_count(j) > 0)
      terms.m_bar_j.push_back(bigram.distinct_successors(j));
  terms.n_h1 = unigram.total();
  terms.n_h2 = sample_size == BiasSampleSize::per_estimator ? bigram.transition_total()
                                                            : unigram.total();
  terms.bias_h1 = bias_h1(terms.m_bar, terms.n_h1);
  terms.bias_h2 = bias_h2(terms.m_bar_j, terms.n_h2);
  terms.bias_mi = bias_mi(terms.m_bar, terms.m_bar_j, terms.n_h2);
  return terms;
}

EntropyReport apply_correction(EntropyReport report, const BiasTerms& terms,
                               bool clamp_for_display) {
  if (terms.n_h1 != report.n ||
      (terms.n_h2 != report.n_transitions && terms.n_h2 != report.n))
    throw MismatchedProvenance("bias terms were computed from a different sample");
  CorrectedEntropies corrected;
  corrected.h1 = report.h1 - terms.bias_h1;
  corrected.h2 = report.h2 - terms.bias_h2;
  corrected.mi = report.mi - terms.bias_mi;
  if (clamp_for_display)
    corrected.mi = std::clamp(corrected.mi, 0.0, corrected.h1);
  report.corrected = corrected;
  return report;
}

EntropyReport analyze_sequence(const ActivitySequence& seq, BiasSampleSize sample_size,
                               bool clamp_for_display) {
  auto [unigram, bigram] = fit_models(seq);
  return apply_correction(entropy_report(unigram, bigram),
                          compute_bias_terms(unigram, bigram, sample_size),
                          clamp_for_display);
}

}  // namespace seqent
