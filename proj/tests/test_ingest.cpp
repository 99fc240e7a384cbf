#include <doctest.h>

#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "seqent/ingest.hpp"
#include "seqent/rng.hpp"

using namespace seqent;

namespace {

EventRecord make_event(std::string user, std::int64_t ts, std::string state,
                       std::vector<std::string> participants = {}) {
  EventRecord record;
  record.user = std::move(user);
  record.ts = ts;
  record.state_label = std::move(state);
  if (!participants.empty()) record.participants = std::move(participants);
  return record;
}

}  // namespace

TEST_CASE("timestamp parsing") {
  CHECK(parse_timestamp("1262304000") == 1262304000);
  CHECK(parse_timestamp("-86400") == -86400);
  CHECK(parse_timestamp("2010-01-01T00:00:00") == 1262304000);
  CHECK(parse_timestamp("2010-01-01T00:00:00Z") == 1262304000);
  CHECK(parse_timestamp("2010-01-01 00:00:01") == 1262304001);
  CHECK(parse_timestamp("1970-01-01T00:00:00") == 0);
  CHECK_THROWS_AS(parse_timestamp("yesterday"), FormatError);
  CHECK_THROWS_AS(parse_timestamp("2010-13-01T00:00:00"), FormatError);
  CHECK_THROWS_AS(parse_timestamp("2010-01-01T00:00:00junk"), FormatError);
  CHECK_THROWS_AS(parse_timestamp(""), FormatError);
}

TEST_CASE("jsonl parsing") {
  std::istringstream in(
      R"({"user":"u1","ts":1262304000,"state":"placeA","participants":["u1","u2"]})"
      "\n"
      R"({"user":"u2","ts":"2010-01-01T00:00:05","state":"placeB"})"
      "\n"
      "\n"
      R"({"user":"u3","ts":12,"state":""})"
      "\n"
      R"(not json at all)"
      "\n"
      R"({"user":"u4","ts":13,"state":"x","participants":["u9"]})"
      "\n");
  const auto result = parse_event_log(in, LogFormat::jsonl);
  REQUIRE(result.records.size() == 2);
  CHECK(result.records[0].user == "u1");
  CHECK(result.records[0].ts == 1262304000);
  CHECK(result.records[0].state_label == "placeA");
  CHECK(result.records[0].is_group());
  CHECK(result.records[1].user == "u2");
  CHECK(result.records[1].ts == 1262304005);
  CHECK(!result.records[1].is_group());

  REQUIRE(result.diagnostics.size() == 3);
  CHECK(result.diagnostics[0].line == 4);  // empty state
  CHECK(result.diagnostics[1].line == 5);  // invalid JSON
  CHECK(result.diagnostics[2].line == 6);  // participants exclude the user
}

TEST_CASE("csv parsing") {
  SUBCASE("valid rows") {
    std::istringstream in(
        "user,ts,state,participants\n"
        "u1,1262304000,placeA,\n"
        "u1,1262304010,placeB,u1;u2\n"
        "u2,2010-01-01T00:00:20,placeA,u2\n");
    const auto result = parse_event_log(in, LogFormat::csv);
    REQUIRE(result.records.size() == 3);
    CHECK(!result.records[0].participants.has_value());
    CHECK(!result.records[0].is_group());
    REQUIRE(result.records[1].participants.has_value());
    CHECK(result.records[1].is_group());
    CHECK(result.records[2].participants == std::vector<std::string>{"u2"});
    CHECK(!result.records[2].is_group());
    CHECK(result.diagnostics.empty());
  }
  SUBCASE("bad header is fatal") {
    std::istringstream in("who,when,where\nu1,1,placeA,\n");
    CHECK_THROWS_AS(parse_event_log(in, LogFormat::csv), FormatError);
  }
  SUBCASE("empty stream is fatal for csv") {
    std::istringstream in("");
    CHECK_THROWS_AS(parse_event_log(in, LogFormat::csv), FormatError);
  }
  SUBCASE("malformed rows become diagnostics") {
    std::istringstream in(
        "user,ts,state,participants\n"
        "u1,notatime,placeA,\n"
        "u1,5\n"
        ",6,placeA,\n"
        "u1,7,placeB,\n");
    const auto result = parse_event_log(in, LogFormat::csv);
    CHECK(result.records.size() == 1);
    REQUIRE(result.diagnostics.size() == 3);
    CHECK(result.diagnostics[0].line == 2);
    CHECK(result.diagnostics[1].line == 3);
    CHECK(result.diagnostics[2].line == 4);
  }
}

TEST_CASE("build_sequences sorts, relabels, and filters") {
  CohortConfig config;
  config.min_events = 2;

  SUBCASE("chronological order with first-appearance relabeling") {
    const std::vector<EventRecord> events{
        make_event("u1", 3, "A"),
        make_event("u1", 1, "B"),
        make_event("u1", 2, "A"),
    };
    const auto sequences = build_sequences(events, config);
    REQUIRE(sequences.count("u1") == 1);
    CHECK(sequences.at("u1").states() == std::vector<std::int32_t>{0, 1, 1});
    CHECK(sequences.at("u1").kind() == StreamKind::mixed);
  }
  SUBCASE("users below min_events are excluded") {
    std::vector<EventRecord> events;
    for (int i = 0; i < 5; ++i) events.push_back(make_event("quiet", i, "A"));
    for (int i = 0; i < 8; ++i) events.push_back(make_event("busy", i, i % 2 ? "A" : "B"));
    config.min_events = 6;
    const auto sequences = build_sequences(events, config);
    CHECK(sequences.count("quiet") == 0);
    CHECK(sequences.count("busy") == 1);
  }
  SUBCASE("equal timestamps keep input order") {
    const std::vector<EventRecord> events{
        make_event("u1", 5, "X"),
        make_event("u1", 5, "Y"),
        make_event("u1", 5, "Z"),
    };
    const auto sequences = build_sequences(events, config);
    CHECK(sequences.at("u1").states() == std::vector<std::int32_t>{0, 1, 2});
  }
  SUBCASE("dedup collapses equal-timestamp duplicates only when asked") {
    const std::vector<EventRecord> events{
        make_event("u1", 1, "A"),
        make_event("u1", 1, "A"),
        make_event("u1", 2, "A"),
        make_event("u1", 2, "B"),
    };
    const auto kept = build_sequences(events, config);
    CHECK(kept.at("u1").size() == 4);

    config.dedup = DedupPolicy::collapse_equal_timestamps;
    const auto collapsed = build_sequences(events, config);
    CHECK(collapsed.at("u1").size() == 3);
  }
  SUBCASE("min_events below 2 is rejected") {
    config.min_events = 1;
    const std::vector<EventRecord> events{make_event("u1", 1, "A")};
    CHECK_THROWS_AS(build_sequences(events, config), InvalidCount);
  }
  SUBCASE("empty input gives an empty map") {
    CHECK(build_sequences({}, config).empty());
  }
}

TEST_CASE("partition_group_individual") {
  CohortConfig config;
  config.min_events = 2;
  config.split_groups = true;

  SUBCASE("classification boundary") {
    const std::vector<EventRecord> events{
        make_event("u1", 1, "A", {"u1", "u2"}),
        make_event("u1", 2, "B", {"u1", "u3"}),
        make_event("u1", 3, "C", {"u1"}),
        make_event("u1", 4, "D"),
    };
    const auto streams = partition_group_individual(events, config);
    REQUIRE(streams.count("u1") == 1);
    REQUIRE(streams.at("u1").group.has_value());
    REQUIRE(streams.at("u1").individual.has_value());
    CHECK(streams.at("u1").group->size() == 2);
    CHECK(streams.at("u1").group->kind() == StreamKind::group);
    CHECK(streams.at("u1").individual->size() == 2);
    CHECK(streams.at("u1").individual->kind() == StreamKind::individual);
  }
  SUBCASE("per-stream activity filter") {
    std::vector<EventRecord> events;
    for (int i = 0; i < 10; ++i) events.push_back(make_event("u1", i, "A"));
    for (int i = 0; i < 3; ++i)
      events.push_back(make_event("u1", 100 + i, "B", {"u1", "u2"}));
    config.min_events = 5;
    const auto streams = partition_group_individual(events, config);
    CHECK(streams.at("u1").individual.has_value());
    CHECK(!streams.at("u1").group.has_value());
  }
  SUBCASE("stream lengths conserve the user's event count") {
    rng::SplitMix64 gen(606);
    std::vector<EventRecord> events;
    const int total = 40;
    for (int i = 0; i < total; ++i) {
      const bool group = gen.next_below(2) == 0;
      events.push_back(group ? make_event("u1", i, "S" + std::to_string(gen.next_below(3)),
                                          {"u1", "u2"})
                             : make_event("u1", i, "S" + std::to_string(gen.next_below(3))));
    }
    const auto streams = partition_group_individual(events, config);
    const std::int64_t ind =
        streams.at("u1").individual ? streams.at("u1").individual->size() : 0;
    const std::int64_t grp = streams.at("u1").group ? streams.at("u1").group->size() : 0;
    CHECK(ind + grp == total);
  }
}

TEST_CASE("sequence file round trip") {
  CohortConfig config;
  config.min_events = 2;
  const std::vector<EventRecord> events{
      make_event("alice", 1, "A"), make_event("alice", 2, "B"), make_event("alice", 3, "A"),
      make_event("bob", 1, "X"),   make_event("bob", 2, "X"),
  };
  const auto sequences = build_sequences(events, config);

  std::ostringstream out;
  write_sequences(out, sequences);
  CHECK(out.str() == "alice\t0 1 0\nbob\t0 0\n");

  std::istringstream in(out.str());
  const auto restored = read_sequences(in);
  REQUIRE(restored.size() == 2);
  CHECK(restored[0].user() == "alice");
  CHECK(restored[0].states() == sequences.at("alice").states());
  CHECK(restored[0].alphabet_size() == sequences.at("alice").alphabet_size());
  CHECK(restored[1].user() == "bob");
  CHECK(restored[1].states() == sequences.at("bob").states());
}

TEST_CASE("sequence file validation") {
  SUBCASE("missing tab") {
    std::istringstream in("alice 0 1 0\n");
    CHECK_THROWS_AS(read_sequences(in), FormatError);
  }
  SUBCASE("non-dense ids") {
    std::istringstream in("alice\t0 2 0\n");
    CHECK_THROWS_AS(read_sequences(in), FormatError);
  }
  SUBCASE("garbage ids") {
    std::istringstream in("alice\t0 x 1\n");
    CHECK_THROWS_AS(read_sequences(in), FormatError);
  }
  SUBCASE("empty input") {
    std::istringstream in("");
    CHECK(read_sequences(in).empty());
  }
}
