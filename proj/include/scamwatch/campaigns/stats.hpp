#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "scamwatch/campaigns/graph.hpp"
#include "scamwatch/detector/phone.hpp"

namespace scamwatch::campaigns {

// One connected component of the campaign graph.
//
// lifetime_days is the difference between the latest and earliest node
// first_seen dates, so a campaign seen on a single day has lifetime 0. (Domain
// lifetimes in the liveness module are inclusive spans instead.)
struct Campaign {
  std::vector<NodeRef> nodes;  // sorted
  std::size_t size = 0;
  std::map<std::string, std::size_t> domain_degrees;
  std::map<std::string, std::size_t> phone_degrees;
  std::int64_t lifetime_days = 0;
  std::set<std::string> tlds;
  std::set<std::string> toll_free_prefixes;

  // Lexicographically smallest node id.
  const std::string& representative() const;
  std::size_t domain_count() const { return domain_degrees.size(); }
  std::size_t phone_count() const { return phone_degrees.size(); }
};

// Partition of all nodes, ordered by size (descending) then representative.
// Only `nodes` and `size` are filled; see campaign_stats.
std::vector<Campaign> connected_components(const CampaignGraph& graph);

// Degrees are taken in the full graph.
Campaign campaign_stats(Campaign campaign, const CampaignGraph& graph,
                        const std::set<std::string>& toll_free_prefixes = detector::default_toll_free_prefixes());

// connected_components followed by campaign_stats on each.
std::vector<Campaign> campaigns_of(const CampaignGraph& graph,
                                   const std::set<std::string>& toll_free_prefixes =
                                       detector::default_toll_free_prefixes());

// Pearson r. Throws InvalidArgument("undefined correlation") for fewer than
// two pairs, mismatched lengths or zero variance in either series.
double pearson_correlation(std::span<const double> x, std::span<const double> y);

// Pearson r over (size, lifetime_days).
double size_lifetime_correlation(const std::vector<Campaign>& campaigns);

struct GraphSummary {
  std::size_t domain_nodes = 0;
  std::size_t phone_nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t components_over_five = 0;  // components with more than 5 nodes
  double avg_domain_degree = 0.0;        // isolated nodes included
  double avg_phone_degree = 0.0;
  std::size_t max_domain_degree = 0;
  std::size_t max_phone_degree = 0;
  double mean_campaign_lifetime = 0.0;
};

GraphSummary summarize(const CampaignGraph& graph, const std::vector<Campaign>& campaigns);

// Hosting details joined onto a campaign from attribution data.
struct CampaignInfrastructure {
  std::size_t ips = 0;
  std::size_t ases = 0;
  std::vector<std::string> countries;  // most frequent first
  std::string top_as_or_cdn;
};

nlohmann::json to_json(const GraphSummary& summary);

// A row shaped like a "top campaigns" table: #D, #P, TLDs, prefixes,
// #IPs/#ASs, countries, top AS or CDN, lifetime.
nlohmann::json campaign_row(const Campaign& campaign, const std::optional<CampaignInfrastructure>& infra);

}  // namespace scamwatch::campaigns
