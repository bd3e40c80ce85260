#include "scamwatch/liveness/liveness.hpp"

#include "scamwatch/common/error.hpp"
#include "scamwatch/corpus/url.hpp"

namespace scamwatch::liveness {

std::vector<std::string> neighbor_urls(std::string_view url) {
  corpus::Url parsed = corpus::parse_url(url);
  std::string origin = parsed.origin();
  std::string path = parsed.path.empty() ? "/" : parsed.path;

  std::vector<std::string> out;
  out.push_back(origin + path);
  // Drop the last segment, ignoring one trailing slash.
  std::string prefix = path;
  if (prefix.size() > 1 && prefix.back() == '/') prefix.pop_back();
  while (prefix.size() > 1) {
    std::size_t slash = prefix.rfind('/');
    prefix = prefix.substr(0, slash + 1);
    std::string candidate = origin + prefix;
    if (candidate != out.back()) out.push_back(candidate);
    if (prefix.size() > 1) prefix.pop_back();
  }
  return out;
}

LivenessTimeline::LivenessTimeline(std::string domain, Date first_seen)
    : domain_(std::move(domain)), first_seen_(first_seen) {}

void LivenessTimeline::record(Date date, bool alive) {
  if (date < first_seen_) {
    throw InvalidArgument("observation on " + format_date(date) + " precedes first_seen " +
                          format_date(first_seen_) + " for " + domain_);
  }
  observations_[date] = alive;
}

std::optional<Date> LivenessTimeline::first_alive() const {
  for (const auto& [date, alive] : observations_) {
    if (alive) return date;
  }
  return std::nullopt;
}

std::optional<Date> LivenessTimeline::last_alive() const {
  for (auto it = observations_.rbegin(); it != observations_.rend(); ++it) {
    if (it->second) return it->first;
  }
  return std::nullopt;
}

LivenessTimeline record_observation(LivenessTimeline timeline, Date date, bool any_neighbor_scam) {
  timeline.record(date, any_neighbor_scam);
  return timeline;
}

std::int64_t compute_lifetime(const LivenessTimeline& timeline) {
  auto first = timeline.first_alive();
  if (!first) return 0;
  return days_between(*first, *timeline.last_alive()) + 1;
}

bool is_retired(const LivenessTimeline& timeline, int max_dead_days) {
  const auto& obs = timeline.observations();
  if (obs.empty() || obs.rbegin()->second) return false;
  Date anchor = timeline.last_alive().value_or(timeline.first_seen());
  return days_between(anchor, obs.rbegin()->first) >= max_dead_days;
}

LifetimeDistribution lifetime_distribution(const std::vector<LivenessTimeline>& timelines) {
  LifetimeDistribution d;
  std::size_t single = 0, short_lived = 0, long_lived = 0;
  double total = 0.0;
  for (const auto& t : timelines) {
    std::int64_t lifetime = compute_lifetime(t);
    if (lifetime == 0) continue;
    ++d.domains;
    single += lifetime == 1;
    short_lived += lifetime <= 3;
    long_lived += lifetime > 40;
    total += static_cast<double>(lifetime);
  }
  if (d.domains > 0) {
    const double n = static_cast<double>(d.domains);
    d.single_day_fraction = static_cast<double>(single) / n;
    d.up_to_three_days_fraction = static_cast<double>(short_lived) / n;
    d.over_forty_days_fraction = static_cast<double>(long_lived) / n;
    d.mean_lifetime_days = total / n;
  }
  return d;
}

void CheckSchedule::track(const std::string& url) {
  if (entries_.count(url)) return;
  auto neighbours = neighbor_urls(url);
  std::set<std::string> set(neighbours.begin(), neighbours.end());
  set.insert(url);
  entries_.emplace(url, std::move(set));
}

void CheckSchedule::mark_checked(const std::string& url, Date date) {
  if (!entries_.count(url)) throw InvalidArgument("URL is not tracked: " + url);
  last_checked_[url] = date;
}

std::optional<Date> CheckSchedule::last_checked(const std::string& url) const {
  auto it = last_checked_.find(url);
  if (it == last_checked_.end()) return std::nullopt;
  return it->second;
}

nlohmann::json CheckSchedule::to_json() const {
  nlohmann::json urls = nlohmann::json::array();
  for (const auto& [url, neighbours] : entries_) {
    auto checked = last_checked(url);
    urls.push_back({{"url", url},
                    {"neighbors", neighbours},
                    {"last_checked", checked ? nlohmann::json(format_date(*checked)) : nlohmann::json(nullptr)}});
  }
  return {{"urls", std::move(urls)}};
}

CheckSchedule CheckSchedule::from_json(const nlohmann::json& object) {
  CheckSchedule schedule;
  try {
    for (const auto& entry : object.at("urls")) {
      std::string url = entry.at("url").get<std::string>();
      auto neighbours = entry.at("neighbors").get<std::set<std::string>>();
      neighbours.insert(url);
      schedule.entries_[url] = std::move(neighbours);
      if (const auto& checked = entry.at("last_checked"); !checked.is_null()) {
        schedule.last_checked_[url] = parse_date(checked.get<std::string>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed schedule: ") + e.what());
  }
  return schedule;
}

std::vector<std::string> due_checks(const CheckSchedule& schedule, Date today) {
  std::vector<std::string> out;
  for (const auto& [url, neighbours] : schedule.entries()) {
    auto checked = schedule.last_checked(url);
    if (!checked || *checked < today) out.push_back(url);
  }
  return out;  // std::map iteration is already lexicographic
}

}  // namespace scamwatch::liveness
