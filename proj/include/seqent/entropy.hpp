#ifndef SEQENT_ENTROPY_HPP
#define SEQENT_ENTROPY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "seqent/types.hpp"

namespace seqent {

/// Which marginal the first-order entropy (and hence MI) is taken over.
///   full:    marginal over all n symbols; MI can dip marginally below zero
///            on short sequences because the marginal and the conditional are
///            estimated from different sample sizes.
///   aligned: marginal over the n-1 successor symbols only, i.e. the same
///            sample the bigram table is built from; MI >= 0 is guaranteed.
enum class EntropyMode { full, aligned };

/// Per-state occurrence counts over a dense alphabet. All counts are >= 1 by
/// construction (the alphabet is dense).
class UnigramModel {
 public:
  UnigramModel(std::vector<std::int64_t> counts, std::int64_t total);

  std::int32_t alphabet_size() const { return static_cast<std::int32_t>(counts_.size()); }
  std::int64_t total() const { return total_; }
  std::int64_t count(std::int32_t state) const { return counts_.at(static_cast<std::size_t>(state)); }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  double prob(std::int32_t state) const {
    return static_cast<double>(count(state)) / static_cast<double>(total_);
  }
  /// Number of states with nonzero probability.
  std::int64_t distinct_observed() const;

  bool operator==(const UnigramModel&) const = default;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

/// Adjacent-pair transition counts c(j -> i) with per-context totals.
/// Storage is a dense M x M table for small alphabets and per-context sorted
/// maps otherwise; iteration order (contexts ascending, successors ascending)
/// is identical in both representations, so floating-point accumulations are
/// reproducible regardless of which one is active.
class BigramModel {
 public:
  BigramModel(std::span<const std::int32_t> states, std::int32_t alphabet_size);

  std::int32_t alphabet_size() const { return alphabet_size_; }
  /// N2: total transitions, equal to n - 1.
  std::int64_t transition_total() const { return transition_total_; }
  std::int64_t context_count(std::int32_t j) const {
    return context_counts_.at(static_cast<std::size_t>(j));
  }
  const std::vector<std::int64_t>& context_counts() const { return context_counts_; }
  std::int64_t transition_count(std::int32_t j, std::int32_t i) const;
  /// p(i|j); context j must have at least one observation.
  double conditional_prob(std::int32_t i, std::int32_t j) const;
  /// Number of distinct successors observed after context j.
  std::int32_t distinct_successors(std::int32_t j) const;
  /// Occurrence counts of the successor states (positions 2..n).
  std::vector<std::int64_t> successor_counts() const;

  /// Calls f(successor_state, count) for each observed successor of j, in
  /// ascending successor order.
  template <typename F>
  void for_each_successor(std::int32_t j, F&& f) const {
    if (dense()) {
      const std::size_t base = static_cast<std::size_t>(j) * static_cast<std::size_t>(alphabet_size_);
      for (std::int32_t i = 0; i < alphabet_size_; ++i) {
        const std::int64_t c = dense_counts_[base + static_cast<std::size_t>(i)];
        if (c > 0) f(i, c);
      }
    } else {
      for (const auto& [i, c] : sparse_counts_[static_cast<std::size_t>(j)]) f(i, c);
    }
  }

 private:
  bool dense() const { return !dense_counts_.empty(); }

  std::int32_t alphabet_size_ = 0;
  std::int64_t transition_total_ = 0;
  std::vector<std::int64_t> dense_counts_;
  std::vector<std::map<std::int32_t, std::int64_t>> sparse_counts_;
  std::vector<std::int64_t> context_counts_;
};

struct CorrectedEntropies {
  double h1 = 0.0;
  double h2 = 0.0;
  double mi = 0.0;

  bool operator==(const CorrectedEntropies&) const = default;
};

/// All entropy quantities of one sequence, in bits.
struct EntropyReport {
  double h0 = 0.0;          // log2(alphabet size)
  double h1 = 0.0;          // marginal entropy over all n symbols
  double h2 = 0.0;          // conditional entropy of successor given state
  double mi = 0.0;          // h1 - h2
  double h1_aligned = 0.0;  // marginal entropy over the n-1 successors
  double mi_aligned = 0.0;  // h1_aligned - h2, nonnegative
  std::int64_t n = 0;
  std::int64_t n_transitions = 0;
  std::int32_t alphabet_size = 0;
  std::optional<CorrectedEntropies> corrected;

  bool operator==(const EntropyReport&) const = default;
};

/// Tallies unigram counts over all n positions and bigram counts over the
/// n-1 adjacent pairs. Throws SequenceTooShort if n < 2.
std::pair<UnigramModel, BigramModel> fit_models(const ActivitySequence& seq);

/// Same, over a raw dense state span (every id in [0, alphabet_size) must
/// occur; construction validates this).
std::pair<UnigramModel, BigramModel> fit_models(std::span<const std::int32_t> states,
                                                std::int32_t alphabet_size);

/// log2(M). Throws InvalidAlphabet if M < 1.
double max_entropy(std::int64_t alphabet_size);

/// -sum p log2 p over counts (zero counts contribute nothing).
double entropy_of_counts(std::span<const std::int64_t> counts, std::int64_t total);

double plugin_entropy(const UnigramModel& model);

/// -sum_j p(j) sum_i p(i|j) log2 p(i|j) with p(j) = c(j)/N2.
/// Throws NoTransitions if the model has no observations.
double conditional_entropy(const BigramModel& model);

inline double mutual_information(double h1, double h2) { return h1 - h2; }

EntropyReport entropy_report(const ActivitySequence& seq);

/// Builds the report from already-fitted models.
EntropyReport entropy_report(const UnigramModel& unigram, const BigramModel& bigram);

}  // namespace seqent

#endif  // SEQENT_ENTROPY_HPP
