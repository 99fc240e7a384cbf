#ifndef SEQENT_COHORT_HPP
#define SEQENT_COHORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqent/ingest.hpp"
#include "seqent/markov.hpp"
#include "seqent/types.hpp"

namespace seqent {

/// A block of synthetic users sharing one chain. label controls whether the
/// emitted events carry a participant list (group) or none (individual).
/// Two cohorts may share a name prefix to give the same users both an
/// individual and a group stream.
struct CohortSpec {
  std::string name;
  std::int32_t users = 0;
  std::int64_t events_per_user = 0;
  StreamKind label = StreamKind::individual;
  MarkovSpec chain;  // length/seed are overridden per user
};

struct SimulationConfig {
  std::uint64_t seed = 0;
  std::vector<CohortSpec> cohorts;
};

/// Reads {"seed": ..., "cohorts": [{"name", "users", "n", "label",
/// "markov": {"M", "P", "initial"?}}, ...]}.
SimulationConfig simulation_config_from_json(const nlohmann::json& j);

/// Deterministic synthetic event log. User u of cohort c draws its chain
/// with seed derive_seed(derive_seed(config.seed, c), u); timestamps are the
/// 0-based event index within the user's stream.
std::vector<EventRecord> simulate_events(const SimulationConfig& config);

/// The JSONL line for one event (key order user, ts, state, participants).
std::string event_to_jsonl(const EventRecord& record);

}  // namespace seqent

#endif  // SEQENT_COHORT_HPP
