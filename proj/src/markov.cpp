#include "seqent/markov.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "seqent/rng.hpp"

namespace seqent {

namespace {

constexpr double kDistributionTolerance = 1e-12;
constexpr std::int64_t kOracleScaleLimit = 10'000;

bool sums_to_one(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) return false;
    sum += p;
  }
  return std::fabs(sum - 1.0) <= kDistributionTolerance;
}

std::int32_t sample_from(const std::vector<double>& probs, double u) {
  double cumulative = 0.0;
  std::int32_t last_nonzero = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    cumulative += probs[i];
    last_nonzero = static_cast<std::int32_t>(i);
    if (u < cumulative) return last_nonzero;
  }
  return last_nonzero;  // guards the roundoff sliver at u ~= 1
}

}  // namespace

void validate(const MarkovSpec& spec) {
  const auto m = static_cast<std::size_t>(spec.alphabet_size);
  if (spec.alphabet_size < 1) throw InvalidSpec("alphabet size must be >= 1");
  if (spec.length < 1) throw InvalidSpec("sequence length must be >= 1");
  if (spec.transition.size() != m)
    throw InvalidSpec("transition matrix must have one row per state");
  for (const auto& row : spec.transition) {
    if (row.size() != m) throw InvalidSpec("transition matrix must be square");
    if (!sums_to_one(row))
      throw InvalidSpec("every transition row must be a distribution (sum 1, entries >= 0)");
  }
  if (spec.initial.size() != m)
    throw InvalidSpec("initial distribution must have one entry per state");
  if (!sums_to_one(spec.initial))
    throw InvalidSpec("initial distribution must sum to 1 with entries >= 0");
}

ActivitySequence sample_markov(const MarkovSpec& spec) {
  validate(spec);
  rng::SplitMix64 gen(spec.seed);
  std::vector<int> states;
  states.reserve(static_cast<std::size_t>(spec.length));
  std::int32_t current = sample_from(spec.initial, gen.next_unit());
  states.push_back(current);
  for (std::int64_t i = 1; i < spec.length; ++i) {
    current = sample_from(spec.transition[static_cast<std::size_t>(current)],
                          gen.next_unit());
    states.push_back(current);
  }
  return ActivitySequence::relabeled(states);
}

std::vector<double> stationary_distribution(
    const std::vector<std::vector<double>>& transition) {
  const std::size_t m = transition.size();
  if (m == 0) throw InvalidSpec("transition matrix is empty");
  for (const auto& row : transition)
    if (row.size() != m || !sums_to_one(row))
      throw InvalidSpec("transition matrix must be square and row-stochastic");

  std::vector<double> pi(m, 1.0 / static_cast<double>(m));
  std::vector<double> next(m, 0.0);
  constexpr std::int64_t max_iterations = 1'000'000;
  for (std::int64_t iter = 0; iter < max_iterations; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      if (pi[j] == 0.0) continue;
      for (std::size_t i = 0; i < m; ++i) next[i] += pi[j] * transition[j][i];
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      residual = std::max(residual, std::fabs(next[i] - pi[i]));
    pi.swap(next);
    if (residual <= kDistributionTolerance) return pi;
  }
  throw NoConvergence("power iteration did not reach a stationary distribution");
}

AnalyticEntropies analytic_entropies(const std::vector<std::vector<double>>& transition,
                                     const std::vector<double>& stationary) {
  if (stationary.size() != transition.size())
    throw InvalidSpec("stationary vector does not match the transition matrix");
  AnalyticEntropies result;
  for (double p : stationary)
    if (p > 0.0) result.h1_inf -= p * std::log2(p);
  for (std::size_t j = 0; j < transition.size(); ++j) {
    if (stationary[j] <= 0.0) continue;
    double hj = 0.0;
    for (double p : transition[j])
      if (p > 0.0) hj -= p * std::log2(p);
    result.h2_inf += stationary[j] * hj;
  }
  result.mi_inf = result.h1_inf - result.h2_inf;
  return result;
}

EntropyReport brute_force_report(const ActivitySequence& seq) {
  if (seq.size() > kOracleScaleLimit)
    throw OracleScaleExceeded("brute-force oracle is limited to n <= 10000");
  if (seq.size() < 2) throw SequenceTooShort("sequence must have length >= 2");

  const std::vector<std::int32_t>& states = seq.states();
  const auto n = static_cast<double>(states.size());
  const double n2 = n - 1.0;

  std::map<std::int32_t, std::int64_t> unigram;
  std::map<std::int32_t, std::int64_t> successor;
  std::map<std::int32_t, std::int64_t> context;
  std::map<std::pair<std::int32_t, std::int32_t>, std::int64_t> pairs;
  for (std::size_t k = 0; k < states.size(); ++k) {
    ++unigram[states[k]];
    if (k + 1 < states.size()) {
      ++context[states[k]];
      ++successor[states[k + 1]];
      ++pairs[{states[k], states[k + 1]}];
    }
  }

  EntropyReport report;
  report.n = seq.size();
  report.n_transitions = seq.size() - 1;
  report.alphabet_size = static_cast<std::int32_t>(unigram.size());
  report.h0 = std::log2(static_cast<double>(unigram.size()));

  for (const auto& [state, count] : unigram) {
    (void)state;
    const double p = static_cast<double>(count) / n;
    report.h1 -= p * std::log2(p);
  }
  for (const auto& [state, count] : successor) {
    (void)state;
    const double p = static_cast<double>(count) / n2;
    report.h1_aligned -= p * std::log2(p);
  }
  for (const auto& [pair, count] : pairs) {
    const double p_joint = static_cast<double>(count) / n2;
    const double p_cond =
        static_cast<double>(count) / static_cast<double>(context.at(pair.first));
    report.h2 -= p_joint * std::log2(p_cond);
  }
  report.mi = report.h1 - report.h2;
  report.mi_aligned = report.h1_aligned - report.h2;
  return report;
}

MarkovSpec markov_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidSpec("Markov spec must be a JSON object");
  MarkovSpec spec;
  try {
    spec.alphabet_size = j.at("M").get<std::int32_t>();
    spec.transition = j.at("P").get<std::vector<std::vector<double>>>();
    spec.length = j.value("n", std::int64_t{0});
    spec.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("initial"))
      spec.initial = j.at("initial").get<std::vector<double>>();
    else if (spec.alphabet_size >= 1)
      spec.initial.assign(static_cast<std::size_t>(spec.alphabet_size),
                          1.0 / static_cast<double>(spec.alphabet_size));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("malformed Markov spec: ") + e.what());
  }
  return spec;
}

MarkovSpec uniform_iid_spec(std::int32_t alphabet_size, std::int64_t length,
                            std::uint64_t seed) {
  if (alphabet_size < 1) throw InvalidSpec("alphabet size must be >= 1");
  MarkovSpec spec;
  spec.alphabet_size = alphabet_size;
  const double p = 1.0 / static_cast<double>(alphabet_size);
  spec.transition.assign(static_cast<std::size_t>(alphabet_size),
                         std::vector<double>(static_cast<std::size_t>(alphabet_size), p));
  spec.initial.assign(static_cast<std::size_t>(alphabet_size), p);
  spec.length = length;
  spec.seed = seed;
  return spec;
}

}  // namespace seqent
