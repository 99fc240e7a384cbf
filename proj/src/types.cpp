#include "seqent/types.hpp"

#include <algorithm>
#include <unordered_map>

namespace seqent {

const char* to_string(StreamKind kind) {
  switch (kind) {
    case StreamKind::individual: return "individual";
    case StreamKind::group: return "group";
    case StreamKind::mixed: return "mixed";
  }
  return "mixed";
}

ActivitySequence ActivitySequence::from_states(std::vector<std::int32_t> states,
                                               std::string user, StreamKind kind) {
  if (states.empty()) throw SequenceTooShort("sequence is empty");
  std::int32_t max_id = -1;
  for (std::int32_t s : states) {
    if (s < 0) throw InvalidAlphabet("state ids must be nonnegative");
    max_id = std::max(max_id, s);
  }
  const auto m = static_cast<std::size_t>(max_id) + 1;
  std::vector<bool> seen(m, false);
  for (std::int32_t s : states) seen[static_cast<std::size_t>(s)] = true;
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw InvalidAlphabet("state ids are not dense: some id in [0, max] is unused");
  return ActivitySequence(std::move(states), static_cast<std::int32_t>(m),
                          std::move(user), kind);
}

ActivitySequence ActivitySequence::relabeled(std::span<const int> raw_labels,
                                             std::string user, StreamKind kind) {
  if (raw_labels.empty()) throw SequenceTooShort("sequence is empty");
  std::vector<int> distinct(raw_labels.begin(), raw_labels.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::unordered_map<int, std::int32_t> dense_id;
  dense_id.reserve(distinct.size());
  for (std::size_t k = 0; k < distinct.size(); ++k)
    dense_id.emplace(distinct[k], static_cast<std::int32_t>(k));
  std::vector<std::int32_t> states;
  states.reserve(raw_labels.size());
  for (int raw : raw_labels) states.push_back(dense_id.at(raw));
  return ActivitySequence(std::move(states), static_cast<std::int32_t>(distinct.size()),
                          std::move(user), kind);
}

ActivitySequence ActivitySequence::from_labels(std::span<const std::string> labels,
                                               std::string user, StreamKind kind) {
  if (labels.empty()) throw SequenceTooShort("sequence is empty");
  std::unordered_map<std::string, std::int32_t> dense_id;
  dense_id.reserve(labels.size());
  std::vector<std::int32_t> states;
  states.reserve(labels.size());
  for (const auto& label : labels) {
    auto [it, inserted] = dense_id.emplace(label, static_cast<std::int32_t>(dense_id.size()));
    states.push_back(it->second);
  }
  return ActivitySequence(std::move(states), static_cast<std::int32_t>(dense_id.size()),
                          std::move(user), kind);
}

}  // namespace seqent
