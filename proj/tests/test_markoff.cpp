#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "seqent/markoff.hpp"
#include "seqent/markov.hpp"
#include "seqent/rng.hpp"

using namespace seqent;
using test_helpers::seq_of;

namespace {

bool is_subsequence(const std::vector<std::int32_t>& sub,
                    const std::vector<std::int32_t>& full) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < full.size() && i < sub.size(); ++j)
    if (full[j] == sub[i]) ++i;
  return i == sub.size();
}

MarkovSpec sticky_chain(double p_stay, std::int64_t n, std::uint64_t seed) {
  MarkovSpec spec;
  spec.alphabet_size = 2;
  spec.transition = {{p_stay, 1.0 - p_stay}, {1.0 - p_stay, p_stay}};
  spec.initial = {0.5, 0.5};
  spec.length = n;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("mark_off basics") {
  rng::SplitMix64 gen(11);
  const auto seq = seq_of(test_helpers::random_labels(gen, 10, 3));

  SUBCASE("rate zero is the identity") {
    const auto kept = mark_off(seq, 0.0, 123);
    CHECK(kept.states() == seq.states());
  }
  SUBCASE("size arithmetic and order preservation") {
    const auto kept = mark_off(seq, 0.3, 7);
    CHECK(kept.size() == 7);
    // mark_off recompacts labels, but with this seed and alphabet every
    // state survives, so ids are comparable directly.
    REQUIRE(kept.alphabet_size() == seq.alphabet_size());
    CHECK(is_subsequence(kept.states(), seq.states()));
  }
  SUBCASE("degenerate retention") {
    const auto tiny = seq_of({1, 2, 1});
    CHECK_THROWS_AS(mark_off(tiny, 0.9, 5), TooFewRemaining);
  }
  SUBCASE("rate domain") {
    CHECK_THROWS_AS(mark_off(seq, -0.1, 5), InvalidCount);
    CHECK_THROWS_AS(mark_off(seq, 1.0, 5), InvalidCount);
  }
  SUBCASE("deterministic per seed") {
    CHECK(mark_off(seq, 0.4, 99).states() == mark_off(seq, 0.4, 99).states());
  }
}

TEST_CASE("mark_off order preservation on long sequences") {
  rng::SplitMix64 gen(77);
  const auto seq = seq_of(test_helpers::random_labels(gen, 500, 2));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto kept = mark_off(seq, 0.5, seed);
    CHECK(kept.size() == 250);
    CHECK(is_subsequence(kept.states(), seq.states()));
  }
}

TEST_CASE("markoff_sweep on a constant sequence never rejects") {
  std::vector<int> labels(200, 3);
  BootstrapOptions options;
  options.replicates = 50;
  const auto rates = default_markoff_rates();
  const auto profile = markoff_sweep(seq_of(labels), rates, 21, options);
  REQUIRE(profile.entries.size() == rates.size());
  for (const auto& entry : profile.entries) CHECK(!entry.bootstrap.reject_null);
  REQUIRE(profile.critical_rate.has_value());
  CHECK(*profile.critical_rate == rates.front());
}

TEST_CASE("sweep at rate zero reproduces the direct bootstrap bit for bit") {
  rng::SplitMix64 gen(300);
  const auto seq = seq_of(test_helpers::random_labels(gen, 150, 4));
  BootstrapOptions options;
  options.replicates = 60;
  const std::uint64_t master = 8080;
  const std::vector<double> rates{0.0, 0.5};
  const auto profile = markoff_sweep(seq, rates, master, options);

  const std::uint64_t stage_seed = rng::derive_seed(master, 0);
  const auto direct = bootstrap_mi_test(seq, rng::derive_seed(stage_seed, 1), options);
  CHECK(profile.entries[0].retained_n == seq.size());
  CHECK(profile.entries[0].bootstrap.mi_true == direct.mi_true);
  CHECK(profile.entries[0].bootstrap.replicates == direct.replicates);
  CHECK(profile.entries[0].bootstrap.p975 == direct.p975);
}

TEST_CASE("sweep validates its rates") {
  const auto seq = seq_of({1, 2, 1, 2, 1, 2, 1, 2});
  BootstrapOptions options;
  options.replicates = 40;
  const std::vector<double> unsorted{0.2, 0.1};
  CHECK_THROWS_AS(markoff_sweep(seq, unsorted, 1, options), InvalidCount);
  const std::vector<double> empty;
  CHECK_THROWS_AS(markoff_sweep(seq, empty, 1, options), InvalidCount);
}

TEST_CASE("retained length follows round((1-r) n) at every rate") {
  rng::SplitMix64 gen(500);
  const auto seq = seq_of(test_helpers::random_labels(gen, 333, 3));
  BootstrapOptions options;
  options.replicates = 40;
  const auto rates = default_markoff_rates();
  const auto profile = markoff_sweep(seq, rates, 99, options);
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const auto expected =
        static_cast<std::int64_t>(std::llround((1.0 - rates[i]) * 333.0));
    CHECK(profile.entries[i].retained_n == expected);
  }
}

TEST_CASE("sticky chain keeps rejecting at low rates and gap shrinks on average") {
  BootstrapOptions options;
  options.replicates = 100;
  const std::vector<double> rates{0.0, 0.4, 0.8};
  double gap_sum[3] = {0.0, 0.0, 0.0};
  const int seeds = 10;
  for (int s = 0; s < seeds; ++s) {
    const auto seq = sample_markov(sticky_chain(0.95, 3000, 7000 + s));
    const auto profile = markoff_sweep(seq, rates, rng::derive_seed(4, s), options);
    CHECK(profile.entries[0].bootstrap.reject_null);
    for (int i = 0; i < 3; ++i) gap_sum[i] += profile.entries[i].bootstrap.gap;
  }
  CHECK(gap_sum[0] > gap_sum[1]);
  CHECK(gap_sum[1] > gap_sum[2]);
}
