#ifndef SEQENT_TYPES_HPP
#define SEQENT_TYPES_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqent {

// Everything thrown by the library derives from Error, so callers can catch
// a single type at the boundary and still branch on the specific failure.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SequenceTooShort : Error { using Error::Error; };
struct InvalidAlphabet : Error { using Error::Error; };
struct NoTransitions : Error { using Error::Error; };
struct InvalidCount : Error { using Error::Error; };
struct MismatchedProvenance : Error { using Error::Error; };
struct InsufficientReplicates : Error { using Error::Error; };
struct TooFewRemaining : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct OracleScaleExceeded : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct DegenerateVariance : Error { using Error::Error; };

enum class StreamKind { individual, group, mixed };

const char* to_string(StreamKind kind);

/// A chronologically ordered sequence of discrete states with a dense
/// alphabet: every state id lies in [0, M) and every id in [0, M) occurs at
/// least once. Immutable after construction.
class ActivitySequence {
 public:
  /// Wraps states that are already dense. Throws InvalidAlphabet if any id is
  /// negative or the ids do not cover 0..max contiguously, SequenceTooShort
  /// if empty.
  static ActivitySequence from_states(std::vector<std::int32_t> states,
                                      std::string user = {},
                                      StreamKind kind = StreamKind::mixed);

  /// Compacts arbitrary integer labels to dense ids, preserving numeric
  /// order (so already-dense input comes back unchanged).
  static ActivitySequence relabeled(std::span<const int> raw_labels,
                                    std::string user = {},
                                    StreamKind kind = StreamKind::mixed);

  /// Maps opaque string labels to dense ids in order of first appearance.
  static ActivitySequence from_labels(std::span<const std::string> labels,
                                      std::string user = {},
                                      StreamKind kind = StreamKind::mixed);

  const std::vector<std::int32_t>& states() const { return states_; }
  std::int64_t size() const { return static_cast<std::int64_t>(states_.size()); }
  std::int32_t alphabet_size() const { return alphabet_size_; }
  const std::string& user() const { return user_; }
  StreamKind kind() const { return kind_; }

  bool operator==(const ActivitySequence&) const = default;

 private:
  ActivitySequence(std::vector<std::int32_t> states, std::int32_t alphabet_size,
                   std::string user, StreamKind kind)
      : states_(std::move(states)),
        alphabet_size_(alphabet_size),
        user_(std::move(user)),
        kind_(kind) {}

  std::vector<std::int32_t> states_;
  std::int32_t alphabet_size_ = 0;
  std::string user_;
  StreamKind kind_ = StreamKind::mixed;
};

}  // namespace seqent

#endif  // SEQENT_TYPES_HPP
