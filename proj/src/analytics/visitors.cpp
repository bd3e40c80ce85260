#include "scamwatch/analytics/visitors.hpp"

#include "scamwatch/common/error.hpp"

namespace scamwatch::analytics {

void VisitorAccumulator::add(const ModStatusSample& sample) {
  auto& ips = ips_[sample.domain];
  ips.insert(sample.client_ips.begin(), sample.client_ips.end());
  days_[sample.domain].insert(to_date(sample.sampled_at));
}

void VisitorAccumulator::merge(const VisitorAccumulator& other) {
  for (const auto& [domain, ips] : other.ips_) ips_[domain].insert(ips.begin(), ips.end());
  for (const auto& [domain, days] : other.days_) days_[domain].insert(days.begin(), days.end());
}

VisitorStats VisitorAccumulator::stats(const std::string& domain) const {
  auto ips = ips_.find(domain);
  if (ips == ips_.end()) throw InvalidArgument("no samples for " + domain);
  VisitorStats stats;
  stats.domain = domain;
  stats.unique_ips = ips->second.size();
  stats.days_observed = days_.at(domain).size();
  if (stats.days_observed > 0) {
    stats.avg_visitors_per_day = static_cast<double>(stats.unique_ips) / static_cast<double>(stats.days_observed);
  }
  return stats;
}

std::vector<VisitorStats> VisitorAccumulator::all_stats() const {
  std::vector<VisitorStats> out;
  for (const auto& entry : ips_) out.push_back(stats(entry.first));
  return out;
}

std::size_t VisitorAccumulator::unique_visitors_deduplicated() const {
  std::set<std::string> all;
  for (const auto& [domain, ips] : ips_) all.insert(ips.begin(), ips.end());
  return all.size();
}

std::size_t VisitorAccumulator::unique_visitors_per_domain_sum() const {
  std::size_t sum = 0;
  for (const auto& [domain, ips] : ips_) sum += ips.size();
  return sum;
}

VisitorStats visitor_stats(const std::vector<ModStatusSample>& samples) {
  if (samples.empty()) throw InvalidArgument("no mod_status samples");
  VisitorAccumulator acc;
  for (const auto& sample : samples) {
    if (sample.domain != samples.front().domain) {
      throw InvalidArgument("samples span several domains: " + samples.front().domain + ", " + sample.domain);
    }
    acc.add(sample);
  }
  return acc.stats(samples.front().domain);
}

std::map<std::string, double> CountryHistogram::fractions() const {
  std::map<std::string, double> out;
  if (mapped == 0) return out;
  for (const auto& [country, count] : counts) {
    if (country == kUnknownCountry) continue;
    out[country] = static_cast<double>(count) / static_cast<double>(mapped);
  }
  return out;
}

CountryHistogram geolocate_visitors(const std::set<std::string>& ips,
                                    const std::map<std::string, std::string>& geo_map) {
  CountryHistogram hist;
  for (const auto& ip : ips) {
    auto it = geo_map.find(ip);
    if (it == geo_map.end()) {
      ++hist.counts[kUnknownCountry];
      ++hist.unmapped;
    } else {
      ++hist.counts[it->second];
      ++hist.mapped;
    }
  }
  return hist;
}

nlohmann::json to_json(const VisitorStats& stats) {
  return {{"domain", stats.domain},
          {"unique_ips", stats.unique_ips},
          {"days_observed", stats.days_observed},
          {"avg_visitors_per_day", stats.avg_visitors_per_day}};
}

nlohmann::json to_json(const CountryHistogram& histogram) {
  return {{"counts", histogram.counts},
          {"mapped", histogram.mapped},
          {"unmapped", histogram.unmapped},
          {"fractions", histogram.fractions()}};
}

}  // namespace scamwatch::analytics
