#ifndef SEQENT_INGEST_HPP
#define SEQENT_INGEST_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqent/types.hpp"

namespace seqent {

/// One raw event-log row. The state label is opaque: a conversation partner,
/// a place id, anything that names a discrete state.
struct EventRecord {
  std::string user;
  std::int64_t ts = 0;  // epoch seconds
  std::string state_label;
  std::optional<std::vector<std::string>> participants;

  bool is_group() const { return participants && participants->size() > 1; }
};

enum class LogFormat { jsonl, csv };

enum class DedupPolicy { keep_all, collapse_equal_timestamps };

struct CohortConfig {
  std::int64_t min_events = 1000;
  bool split_groups = false;
  DedupPolicy dedup = DedupPolicy::keep_all;
};

struct RowDiagnostic {
  std::size_t line = 0;
  std::string message;
};

struct ParseResult {
  std::vector<EventRecord> records;
  std::vector<RowDiagnostic> diagnostics;  // malformed rows, with line numbers
};

/// Epoch seconds from either a plain integer string or an ISO-8601 timestamp
/// "YYYY-MM-DDTHH:MM:SS" (space separator and trailing 'Z' accepted; treated
/// as UTC). Throws FormatError on anything else.
std::int64_t parse_timestamp(const std::string& text);

/// Reads an event log. Malformed rows become per-line diagnostics rather
/// than aborting the parse; a missing or wrong CSV header is fatal
/// (FormatError). Blank lines are skipped.
ParseResult parse_event_log(std::istream& input, LogFormat format);

/// Per-user chronological sequences: events sorted by (timestamp, stable
/// input order), state labels densely relabeled per user in first-appearance
/// order, users below min_events dropped.
std::map<std::string, ActivitySequence> build_sequences(
    std::span<const EventRecord> events, const CohortConfig& config);

struct UserStreams {
  std::optional<ActivitySequence> individual;
  std::optional<ActivitySequence> group;
};

/// Splits each user's events into a group stream (more than one participant)
/// and an individual stream (one or no participants), each relabeled
/// independently with min_events applied per stream.
std::map<std::string, UserStreams> partition_group_individual(
    std::span<const EventRecord> events, const CohortConfig& config);

/// Sequence file: one line per sequence, "user-id TAB space-separated dense
/// state ids".
void write_sequences(std::ostream& out, std::span<const ActivitySequence> sequences);
void write_sequences(std::ostream& out,
                     const std::map<std::string, ActivitySequence>& sequences);
std::vector<ActivitySequence> read_sequences(std::istream& in);

}  // namespace seqent

#endif  // SEQENT_INGEST_HPP
