#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scamwatch/liveness/liveness.hpp"

namespace scamwatch::liveness {

// One line of the timeline store. `seq` is a monotone ingestion counter that
// breaks ties between rows for the same (domain, date).
struct StoredObservation {
  std::string domain;
  Date date{};
  bool alive = false;
  std::uint64_t seq = 0;

  bool operator==(const StoredObservation&) const = default;
};

std::vector<StoredObservation> parse_timeline_store(std::string_view content);
std::string serialize_timeline_store(const std::vector<StoredObservation>& rows);

// Rebuilds timelines from rows in any order: for each (domain, date) the row
// with the highest seq wins. first_seen is the earliest date per domain.
std::map<std::string, LivenessTimeline> replay_timeline_store(const std::vector<StoredObservation>& rows);

// Compacted store (one row per domain and date, sorted) after applying
// `updates`. An update that repeats the current value keeps its row
// unchanged, so re-applying the same updates is a fixpoint.
std::vector<StoredObservation> apply_to_store(const std::vector<StoredObservation>& store,
                                              const std::vector<StoredObservation>& updates);

}  // namespace scamwatch::liveness
