#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scamwatch/common/time.hpp"

namespace scamwatch::liveness {

// URLs that may host the same scam: the URL without query and fragment,
// then each shorter path prefix ending in '/', down to the site root.
// Throws ParseError for relative URLs.
std::vector<std::string> neighbor_urls(std::string_view url);

// Daily alive/dead observations of one grouping domain.
class LivenessTimeline {
 public:
  LivenessTimeline(std::string domain, Date first_seen);

  // Last write wins for a repeated date. Throws InvalidArgument if `date`
  // precedes first_seen.
  void record(Date date, bool alive);

  const std::string& domain() const { return domain_; }
  Date first_seen() const { return first_seen_; }
  const std::map<Date, bool>& observations() const { return observations_; }

  std::optional<Date> first_alive() const;
  std::optional<Date> last_alive() const;

  bool operator==(const LivenessTimeline&) const = default;

 private:
  std::string domain_;
  Date first_seen_;
  std::map<Date, bool> observations_;
};

LivenessTimeline record_observation(LivenessTimeline timeline, Date date, bool any_neighbor_scam);

// Inclusive day span between the first and last alive observations; dead or
// missing days in between do not shorten it. 0 when never alive.
std::int64_t compute_lifetime(const LivenessTimeline& timeline);

// True once the latest observation is dead and at least `max_dead_days`
// days have passed since the last alive day (or first_seen, if never alive).
bool is_retired(const LivenessTimeline& timeline, int max_dead_days);

struct LifetimeDistribution {
  std::size_t domains = 0;  // timelines with at least one alive day
  double single_day_fraction = 0.0;
  double up_to_three_days_fraction = 0.0;
  double over_forty_days_fraction = 0.0;
  double mean_lifetime_days = 0.0;
};

LifetimeDistribution lifetime_distribution(const std::vector<LivenessTimeline>& timelines);

// Tracked scam URLs, their neighbour sets, and when each was last probed.
class CheckSchedule {
 public:
  // Adds `url` (and its neighbours) if not already tracked.
  void track(const std::string& url);
  void mark_checked(const std::string& url, Date date);

  const std::map<std::string, std::set<std::string>>& entries() const { return entries_; }
  std::optional<Date> last_checked(const std::string& url) const;

  nlohmann::json to_json() const;
  static CheckSchedule from_json(const nlohmann::json& object);

 private:
  std::map<std::string, std::set<std::string>> entries_;
  std::map<std::string, Date> last_checked_;
};

// Tracked URLs never checked or last checked before `today`, sorted.
std::vector<std::string> due_checks(const CheckSchedule& schedule, Date today);

}  // namespace scamwatch::liveness
