#include "seqent/cohort.hpp"

#include <cstdio>

#include "seqent/rng.hpp"

namespace seqent {

namespace {

std::string padded_user_name(const std::string& cohort, std::int32_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d", index);
  return cohort + "_" + buf;
}

std::string state_name(std::int32_t state) { return "s" + std::to_string(state); }

}  // namespace

SimulationConfig simulation_config_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cohorts") || !j["cohorts"].is_array())
    throw InvalidSpec("simulation config must be an object with a 'cohorts' array");
  SimulationConfig config;
  config.seed = j.value("seed", std::uint64_t{0});
  for (const nlohmann::json& c : j["cohorts"]) {
    CohortSpec cohort;
    try {
      cohort.name = c.at("name").get<std::string>();
      cohort.users = c.at("users").get<std::int32_t>();
      cohort.events_per_user = c.at("n").get<std::int64_t>();
      const std::string label = c.value("label", std::string("individual"));
      if (label == "individual")
        cohort.label = StreamKind::individual;
      else if (label == "group")
        cohort.label = StreamKind::group;
      else
        throw InvalidSpec("cohort label must be 'individual' or 'group'");
      cohort.chain = markov_spec_from_json(c.at("markov"));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidSpec(std::string("malformed cohort: ") + e.what());
    }
    if (cohort.name.empty()) throw InvalidSpec("cohort name must be nonempty");
    if (cohort.users < 1) throw InvalidSpec("cohort must have at least one user");
    if (cohort.events_per_user < 2)
      throw InvalidSpec("cohort needs at least 2 events per user");
    cohort.chain.length = cohort.events_per_user;
    validate(cohort.chain);
    config.cohorts.push_back(std::move(cohort));
  }
  return config;
}

std::vector<EventRecord> simulate_events(const SimulationConfig& config) {
  std::vector<EventRecord> events;
  for (std::size_t c = 0; c < config.cohorts.size(); ++c) {
    const CohortSpec& cohort = config.cohorts[c];
    const std::uint64_t cohort_seed = rng::derive_seed(config.seed, c);
    for (std::int32_t u = 0; u < cohort.users; ++u) {
      MarkovSpec chain = cohort.chain;
      chain.length = cohort.events_per_user;
      chain.seed = rng::derive_seed(cohort_seed, static_cast<std::uint64_t>(u));
      const ActivitySequence seq = sample_markov(chain);
      const std::string user = padded_user_name(cohort.name, u);
      for (std::int64_t t = 0; t < seq.size(); ++t) {
        EventRecord record;
        record.user = user;
        record.ts = t;
        record.state_label = state_name(seq.states()[static_cast<std::size_t>(t)]);
        if (cohort.label == StreamKind::group)
          record.participants = std::vector<std::string>{user, cohort.name + "_peer"};
        events.push_back(std::move(record));
      }
    }
  }
  return events;
}

std::string event_to_jsonl(const EventRecord& record) {
  nlohmann::ordered_json j;
  j["user"] = record.user;
  j["ts"] = record.ts;
  j["state"] = record.state_label;
  if (record.participants) j["participants"] = *record.participants;
  return j.dump();
}

}  // namespace seqent
