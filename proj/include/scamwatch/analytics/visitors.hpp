#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "scamwatch/analytics/mod_status.hpp"

namespace scamwatch::analytics {

struct VisitorStats {
  std::string domain;
  std::size_t unique_ips = 0;
  std::size_t days_observed = 0;
  double avg_visitors_per_day = 0.0;

  bool operator==(const VisitorStats&) const = default;
};

// Mergeable per-domain accumulator; merge order does not matter.
class VisitorAccumulator {
 public:
  void add(const ModStatusSample& sample);
  void merge(const VisitorAccumulator& other);

  const std::map<std::string, std::set<std::string>>& ips_by_domain() const { return ips_; }
  const std::map<std::string, std::set<Date>>& days_by_domain() const { return days_; }

  VisitorStats stats(const std::string& domain) const;  // throws InvalidArgument if never seen
  std::vector<VisitorStats> all_stats() const;            // by domain

  // An IP seen on several domains counts once here...
  std::size_t unique_visitors_deduplicated() const;
  // ...and once per domain here.
  std::size_t unique_visitors_per_domain_sum() const;

 private:
  std::map<std::string, std::set<std::string>> ips_;
  std::map<std::string, std::set<Date>> days_;
};

// Samples must share one domain. Throws InvalidArgument for an empty list or
// mixed domains.
VisitorStats visitor_stats(const std::vector<ModStatusSample>& samples);

struct CountryHistogram {
  std::map<std::string, std::size_t> counts;  // unmapped IPs under "unknown"
  std::size_t mapped = 0;
  std::size_t unmapped = 0;

  // Share of each country among mapped IPs; empty when nothing mapped.
  std::map<std::string, double> fractions() const;
};

inline constexpr const char* kUnknownCountry = "unknown";

CountryHistogram geolocate_visitors(const std::set<std::string>& ips,
                                    const std::map<std::string, std::string>& geo_map);

nlohmann::json to_json(const VisitorStats& stats);
nlohmann::json to_json(const CountryHistogram& histogram);

}  // namespace scamwatch::analytics
