#include "seqent/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace seqent {

namespace {

using nlohmann::json;

void strip_trailing_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Days since 1970-01-01 for a proleptic Gregorian civil date
// (Howard Hinnant's days_from_civil).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Validates the shared field constraints; returns an error message or empty.
std::string validate_record(const EventRecord& record) {
  if (record.user.empty()) return "user is empty";
  if (record.state_label.empty()) return "state is empty";
  if (record.participants &&
      std::find(record.participants->begin(), record.participants->end(),
                record.user) == record.participants->end())
    return "participants do not include the event's user";
  return {};
}

struct RowError {
  std::string message;
};

EventRecord parse_jsonl_row(const std::string& line) {
  const json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) throw RowError{"invalid JSON"};
  if (!j.is_object()) throw RowError{"expected a JSON object"};

  EventRecord record;
  if (!j.contains("user") || !j["user"].is_string()) throw RowError{"missing string field 'user'"};
  record.user = j["user"].get<std::string>();
  if (!j.contains("state") || !j["state"].is_string())
    throw RowError{"missing string field 'state'"};
  record.state_label = j["state"].get<std::string>();

  if (!j.contains("ts")) throw RowError{"missing field 'ts'"};
  const json& ts = j["ts"];
  if (ts.is_number_integer()) {
    record.ts = ts.get<std::int64_t>();
  } else if (ts.is_string()) {
    try {
      record.ts = parse_timestamp(ts.get<std::string>());
    } catch (const FormatError& e) {
      throw RowError{e.what()};
    }
  } else {
    throw RowError{"'ts' must be integer epoch seconds or an ISO-8601 string"};
  }

  if (j.contains("participants") && !j["participants"].is_null()) {
    if (!j["participants"].is_array()) throw RowError{"'participants' must be an array"};
    std::vector<std::string> participants;
    for (const json& p : j["participants"]) {
      if (!p.is_string()) throw RowError{"'participants' entries must be strings"};
      participants.push_back(p.get<std::string>());
    }
    if (!participants.empty()) record.participants = std::move(participants);
  }

  if (std::string err = validate_record(record); !err.empty()) throw RowError{err};
  return record;
}

EventRecord parse_csv_row(const std::string& line) {
  const std::vector<std::string> fields = split(line, ',');
  if (fields.size() < 3 || fields.size() > 4)
    throw RowError{"expected 4 comma-separated fields (user,ts,state,participants)"};

  EventRecord record;
  record.user = fields[0];
  try {
    record.ts = parse_timestamp(fields[1]);
  } catch (const FormatError& e) {
    throw RowError{e.what()};
  }
  record.state_label = fields[2];
  if (fields.size() == 4 && !fields[3].empty()) {
    std::vector<std::string> participants;
    for (auto& p : split(fields[3], ';'))
      if (!p.empty()) participants.push_back(std::move(p));
    if (!participants.empty()) record.participants = std::move(participants);
  }
  if (std::string err = validate_record(record); !err.empty()) throw RowError{err};
  return record;
}

}  // namespace

std::int64_t parse_timestamp(const std::string& text) {
  if (is_integer_literal(text)) {
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw FormatError("timestamp out of range: '" + text + "'");
    return value;
  }

  int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  char sep = 0;
  int consumed = 0;
  const int matched = std::sscanf(text.c_str(), "%4d-%2d-%2d%c%2d:%2d:%2d%n", &year,
                                  &month, &day, &sep, &hour, &minute, &second, &consumed);
  const bool tail_ok =
      consumed > 0 && (text.size() == static_cast<std::size_t>(consumed) ||
                       (text.size() == static_cast<std::size_t>(consumed) + 1 &&
                        text[static_cast<std::size_t>(consumed)] == 'Z'));
  if (matched != 7 || (sep != 'T' && sep != ' ') || !tail_ok ||
      month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 ||
      second > 60)
    throw FormatError("unparseable timestamp: '" + text + "'");
  return days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)) *
             86400 +
         hour * 3600 + minute * 60 + second;
}

ParseResult parse_event_log(std::istream& input, LogFormat format) {
  ParseResult result;
  std::string line;
  std::size_t line_no = 0;

  if (format == LogFormat::csv) {
    if (!std::getline(input, line))
      throw FormatError("CSV input is empty; expected header 'user,ts,state,participants'");
    ++line_no;
    strip_trailing_cr(line);
    if (line != "user,ts,state,participants")
      throw FormatError("bad CSV header: '" + line +
                        "' (expected 'user,ts,state,participants')");
  }

  while (std::getline(input, line)) {
    ++line_no;
    strip_trailing_cr(line);
    if (line.empty()) continue;
    try {
      result.records.push_back(format == LogFormat::jsonl ? parse_jsonl_row(line)
                                                          : parse_csv_row(line));
    } catch (const RowError& err) {
      result.diagnostics.push_back({line_no, err.message});
    }
  }
  return result;
}

namespace {

struct OrderedEvent {
  std::int64_t ts;
  std::size_t input_order;
  const EventRecord* record;
};

// Sorted, optionally deduplicated label sequence for one user's events.
std::vector<std::string> ordered_labels(std::vector<OrderedEvent>& events,
                                        DedupPolicy dedup) {
  std::stable_sort(events.begin(), events.end(),
                   [](const OrderedEvent& a, const OrderedEvent& b) { return a.ts < b.ts; });
  std::vector<std::string> labels;
  labels.reserve(events.size());
  const EventRecord* prev = nullptr;
  for (const OrderedEvent& e : events) {
    if (dedup == DedupPolicy::collapse_equal_timestamps && prev != nullptr &&
        prev->ts == e.record->ts && prev->state_label == e.record->state_label)
      continue;
    labels.push_back(e.record->state_label);
    prev = e.record;
  }
  return labels;
}

void check_config(const CohortConfig& config) {
  if (config.min_events < 2) throw InvalidCount("min_events must be >= 2");
}

}  // namespace

std::map<std::string, ActivitySequence> build_sequences(
    std::span<const EventRecord> events, const CohortConfig& config) {
  check_config(config);
  std::map<std::string, std::vector<OrderedEvent>> per_user;
  for (std::size_t i = 0; i < events.size(); ++i)
    per_user[events[i].user].push_back({events[i].ts, i, &events[i]});

  std::map<std::string, ActivitySequence> sequences;
  for (auto& [user, user_events] : per_user) {
    const std::vector<std::string> labels = ordered_labels(user_events, config.dedup);
    if (static_cast<std::int64_t>(labels.size()) < config.min_events) continue;
    sequences.emplace(user, ActivitySequence::from_labels(labels, user, StreamKind::mixed));
  }
  return sequences;
}

std::map<std::string, UserStreams> partition_group_individual(
    std::span<const EventRecord> events, const CohortConfig& config) {
  check_config(config);
  struct Split {
    std::vector<OrderedEvent> individual;
    std::vector<OrderedEvent> group;
  };
  std::map<std::string, Split> per_user;
  for (std::size_t i = 0; i < events.size(); ++i) {
    auto& split = per_user[events[i].user];
    (events[i].is_group() ? split.group : split.individual)
        .push_back({events[i].ts, i, &events[i]});
  }

  std::map<std::string, UserStreams> streams;
  for (auto& [user, split] : per_user) {
    UserStreams user_streams;
    const std::vector<std::string> ind = ordered_labels(split.individual, config.dedup);
    if (static_cast<std::int64_t>(ind.size()) >= config.min_events)
      user_streams.individual =
          ActivitySequence::from_labels(ind, user, StreamKind::individual);
    const std::vector<std::string> grp = ordered_labels(split.group, config.dedup);
    if (static_cast<std::int64_t>(grp.size()) >= config.min_events)
      user_streams.group = ActivitySequence::from_labels(grp, user, StreamKind::group);
    if (user_streams.individual || user_streams.group)
      streams.emplace(user, std::move(user_streams));
  }
  return streams;
}

void write_sequences(std::ostream& out, std::span<const ActivitySequence> sequences) {
  for (const ActivitySequence& seq : sequences) {
    out << seq.user() << '\t';
    for (std::size_t i = 0; i < seq.states().size(); ++i) {
      if (i > 0) out << ' ';
      out << seq.states()[i];
    }
    out << '\n';
  }
}

void write_sequences(std::ostream& out,
                     const std::map<std::string, ActivitySequence>& sequences) {
  for (const auto& [user, seq] : sequences) {
    (void)user;
    write_sequences(out, std::span<const ActivitySequence>(&seq, 1));
  }
}

std::vector<ActivitySequence> read_sequences(std::istream& in) {
  std::vector<ActivitySequence> sequences;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_trailing_cr(line);
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw FormatError("sequence file line " + std::to_string(line_no) +
                        ": expected 'user<TAB>states'");
    const std::string user = line.substr(0, tab);
    std::vector<std::int32_t> states;
    std::istringstream fields(line.substr(tab + 1));
    std::string token;
    while (fields >> token) {
      std::int32_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw FormatError("sequence file line " + std::to_string(line_no) +
                          ": bad state id '" + token + "'");
      states.push_back(value);
    }
    try {
      sequences.push_back(
          ActivitySequence::from_states(std::move(states), user, StreamKind::mixed));
    } catch (const Error& e) {
      throw FormatError("sequence file line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  return sequences;
}

}  // namespace seqent
