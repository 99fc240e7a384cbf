#include "seqent/entropy.hpp"

#include <cmath>

namespace seqent {

namespace {
// Above this alphabet size the M x M dense table gets replaced by
// per-context maps; transitions are O(n), so sparse storage stays small.
constexpr std::int32_t kDenseAlphabetLimit = 256;
}  // namespace

UnigramModel::UnigramModel(std::vector<std::int64_t> counts, std::int64_t total)
    : counts_(std::move(counts)), total_(total) {
  if (total_ < 1) throw InvalidCount("unigram total must be positive");
  std::int64_t sum = 0;
  for (std::int64_t c : counts_) {
    if (c < 1) throw InvalidAlphabet("dense alphabet requires every count >= 1");
    sum += c;
  }
  if (sum != total_) throw InvalidCount("unigram counts do not sum to total");
}

std::int64_t UnigramModel::distinct_observed() const {
  std::int64_t m = 0;
  for (std::int64_t c : counts_)
    if (c > 0) ++m;
  return m;
}

BigramModel::BigramModel(std::span<const std::int32_t> states, std::int32_t alphabet_size)
    : alphabet_size_(alphabet_size) {
  if (states.size() < 2) throw SequenceTooShort("need at least one transition");
  const auto m = static_cast<std::size_t>(alphabet_size_);
  context_counts_.assign(m, 0);
  const bool use_dense = alphabet_size_ <= kDenseAlphabetLimit;
  if (use_dense)
    dense_counts_.assign(m * m, 0);
  else
    sparse_counts_.assign(m, {});
  for (std::size_t k = 0; k + 1 < states.size(); ++k) {
    const auto j = static_cast<std::size_t>(states[k]);
    const std::int32_t i = states[k + 1];
    ++context_counts_[j];
    if (use_dense)
      ++dense_counts_[j * m + static_cast<std::size_t>(i)];
    else
      ++sparse_counts_[j][i];
  }
  transition_total_ = static_cast<std::int64_t>(states.size()) - 1;
}

std::int64_t BigramModel::transition_count(std::int32_t j, std::int32_t i) const {
  const auto m = static_cast<std::size_t>(alphabet_size_);
  if (dense()) return dense_counts_.at(static_cast<std::size_t>(j) * m + static_cast<std::size_t>(i));
  const auto& row = sparse_counts_.at(static_cast<std::size_t>(j));
  auto it = row.find(i);
  return it == row.end() ? 0 : it->second;
}

double BigramModel::conditional_prob(std::int32_t i, std::int32_t j) const {
  const std::int64_t cj = context_count(j);
  if (cj == 0) throw NoTransitions("context has no observations");
  return static_cast<double>(transition_count(j, i)) / static_cast<double>(cj);
}

std::int32_t BigramModel::distinct_successors(std::int32_t j) const {
  std::int32_t distinct = 0;
  for_each_successor(j, [&](std::int32_t, std::int64_t) { ++distinct; });
  return distinct;
}

std::vector<std::int64_t> BigramModel::successor_counts() const {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(alphabet_size_), 0);
  for (std::int32_t j = 0; j < alphabet_size_; ++j)
    for_each_successor(j, [&](std::int32_t i, std::int64_t c) {
      counts[static_cast<std::size_t>(i)] += c;
    });
  return counts;
}

std::pair<UnigramModel, BigramModel> fit_models(std::span<const std::int32_t> states,
                                                std::int32_t alphabet_size) {
  if (states.size() < 2) throw SequenceTooShort("sequence must have length >= 2");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(alphabet_size), 0);
  for (std::int32_t s : states) ++counts.at(static_cast<std::size_t>(s));
  UnigramModel unigram(std::move(counts), static_cast<std::int64_t>(states.size()));
  BigramModel bigram(states, alphabet_size);
  return {std::move(unigram), std::move(bigram)};
}

std::pair<UnigramModel, BigramModel> fit_models(const ActivitySequence& seq) {
  return fit_models(seq.states(), seq.alphabet_size());
}

double max_entropy(std::int64_t alphabet_size) {
  if (alphabet_size < 1) throw InvalidAlphabet("alphabet size must be >= 1");
  return std::log2(static_cast<double>(alphabet_size));
}

double entropy_of_counts(std::span<const std::int64_t> counts, std::int64_t total) {
  if (total < 1) throw InvalidCount("entropy requires a positive total");
  double h = 0.0;
  for (std::int64_t c : counts) {
    if (c <= 0) continue;  // 0 log 0 := 0
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

double plugin_entropy(const UnigramModel& model) {
  return entropy_of_counts(model.counts(), model.total());
}

double conditional_entropy(const BigramModel& model) {
  const std::int64_t n2 = model.transition_total();
  if (n2 < 1) throw NoTransitions("no transitions observed");
  double h = 0.0;
  for (std::int32_t j = 0; j < model.alphabet_size(); ++j) {
    const std::int64_t cj = model.context_count(j);
    if (cj == 0) continue;
    double hj = 0.0;
    model.for_each_successor(j, [&](std::int32_t, std::int64_t c) {
      const double p = static_cast<double>(c) / static_cast<double>(cj);
      hj -= p * std::log2(p);
    });
    h += (static_cast<double>(cj) / static_cast<double>(n2)) * hj;
  }
  return h;
}

EntropyReport entropy_report(const UnigramModel& unigram, const BigramModel& bigram) {
  EntropyReport report;
  report.n = unigram.total();
  report.n_transitions = bigram.transition_total();
  report.alphabet_size = unigram.alphabet_size();
  report.h0 = max_entropy(unigram.alphabet_size());
  report.h1 = plugin_entropy(unigram);
  report.h2 = conditional_entropy(bigram);
  report.mi = mutual_information(report.h1, report.h2);
  const auto successors = bigram.successor_counts();
  report.h1_aligned = entropy_of_counts(successors, bigram.transition_total());
  report.mi_aligned = mutual_information(report.h1_aligned, report.h2);
  return report;
}

EntropyReport entropy_report(const ActivitySequence& seq) {
  auto [unigram, bigram] = fit_models(seq);
  return entropy_report(unigram, bigram);
}

}  // namespace seqent
