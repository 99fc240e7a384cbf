#ifndef SEQENT_MARKOV_HPP
#define SEQENT_MARKOV_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "seqent/entropy.hpp"
#include "seqent/types.hpp"

namespace seqent {

/// First-order Markov chain specification with known ground truth, used to
/// validate the estimators.
struct MarkovSpec {
  std::int32_t alphabet_size = 0;
  std::vector<std::vector<double>> transition;  // row-stochastic, M x M
  std::vector<double> initial;                  // distribution over states
  std::int64_t length = 0;
  std::uint64_t seed = 0;
};

/// Throws InvalidSpec unless rows and the initial distribution are
/// nonnegative and sum to 1 within 1e-12, dimensions match, and length >= 1.
void validate(const MarkovSpec& spec);

/// Length-n sample: first state from the initial distribution, then row
/// draws. States are compacted to a dense alphabet (numeric order) since a
/// finite sample may miss states. Deterministic per seed.
ActivitySequence sample_markov(const MarkovSpec& spec);

/// Stationary distribution by power iteration from the uniform vector, to
/// residual 1e-12 (max-norm), at most 1e6 iterations. Throws NoConvergence
/// for chains whose iteration oscillates (e.g. reducible/periodic cases).
std::vector<double> stationary_distribution(const std::vector<std::vector<double>>& transition);

struct AnalyticEntropies {
  double h1_inf = 0.0;  // entropy of the stationary distribution
  double h2_inf = 0.0;  // entropy rate
  double mi_inf = 0.0;  // h1_inf - h2_inf
};

AnalyticEntropies analytic_entropies(const std::vector<std::vector<double>>& transition,
                                     const std::vector<double>& stationary);

/// Independent witness for entropy_report: direct dictionary-of-counts
/// summation sharing no code with the model-based path. Limited to n <= 1e4
/// (throws OracleScaleExceeded beyond).
EntropyReport brute_force_report(const ActivitySequence& seq);

/// Reads {"M": ..., "P": [[...]], "initial": [...], "n": ..., "seed": ...};
/// initial defaults to uniform, seed to 0.
MarkovSpec markov_spec_from_json(const nlohmann::json& j);

/// Spec whose rows all equal the uniform distribution (i.i.d. sampling).
MarkovSpec uniform_iid_spec(std::int32_t alphabet_size, std::int64_t length,
                            std::uint64_t seed);

}  // namespace seqent

#endif  // SEQENT_MARKOV_HPP
