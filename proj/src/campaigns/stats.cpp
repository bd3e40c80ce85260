#include "scamwatch/campaigns/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scamwatch/common/error.hpp"

namespace scamwatch::campaigns {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace

const std::string& Campaign::representative() const {
  static const std::string empty;
  if (nodes.empty()) return empty;
  const std::string* best = &nodes.front().id;
  for (const auto& n : nodes) {
    if (n.id < *best) best = &n.id;
  }
  return *best;
}

std::vector<Campaign> connected_components(const CampaignGraph& graph) {
  std::vector<NodeRef> nodes;
  std::map<std::string, std::size_t> domain_index, phone_index;
  for (const auto& [d, seen] : graph.domain_nodes()) {
    domain_index[d] = nodes.size();
    nodes.push_back({NodeKind::domain, d});
  }
  for (const auto& [p, seen] : graph.phone_nodes()) {
    phone_index[p] = nodes.size();
    nodes.push_back({NodeKind::phone, p});
  }
  DisjointSets sets(nodes.size());
  for (const auto& [edge, seen] : graph.edges()) sets.unite(domain_index.at(edge.first), phone_index.at(edge.second));

  std::map<std::size_t, Campaign> by_root;
  for (std::size_t i = 0; i < nodes.size(); ++i) by_root[sets.find(i)].nodes.push_back(nodes[i]);

  std::vector<Campaign> out;
  out.reserve(by_root.size());
  for (auto& [root, campaign] : by_root) {
    std::sort(campaign.nodes.begin(), campaign.nodes.end());
    campaign.size = campaign.nodes.size();
    out.push_back(std::move(campaign));
  }
  std::sort(out.begin(), out.end(), [](const Campaign& a, const Campaign& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.representative() < b.representative();
  });
  return out;
}

Campaign campaign_stats(Campaign campaign, const CampaignGraph& graph, const std::set<std::string>& toll_free_prefixes) {
  auto domain_degrees = graph.domain_degrees();
  auto phone_degrees = graph.phone_degrees();
  campaign.size = campaign.nodes.size();
  campaign.domain_degrees.clear();
  campaign.phone_degrees.clear();
  campaign.tlds.clear();
  campaign.toll_free_prefixes.clear();
  std::optional<Date> earliest, latest;
  for (const auto& node : campaign.nodes) {
    Date seen = to_date(graph.first_seen(node));
    if (!earliest || seen < *earliest) earliest = seen;
    if (!latest || seen > *latest) latest = seen;
    if (node.kind == NodeKind::domain) {
      campaign.domain_degrees[node.id] = domain_degrees.at(node.id);
      auto dot = node.id.rfind('.');
      campaign.tlds.insert(dot == std::string::npos ? node.id : node.id.substr(dot + 1));
    } else {
      campaign.phone_degrees[node.id] = phone_degrees.at(node.id);
      if (detector::is_toll_free(node.id, toll_free_prefixes)) campaign.toll_free_prefixes.insert(node.id.substr(0, 3));
    }
  }
  campaign.lifetime_days = earliest ? days_between(*earliest, *latest) : 0;
  return campaign;
}

std::vector<Campaign> campaigns_of(const CampaignGraph& graph, const std::set<std::string>& toll_free_prefixes) {
  auto components = connected_components(graph);
  for (auto& c : components) c = campaign_stats(std::move(c), graph, toll_free_prefixes);
  return components;
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("undefined correlation");
  const double n = static_cast<double>(x.size());
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw InvalidArgument("undefined correlation");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double size_lifetime_correlation(const std::vector<Campaign>& campaigns) {
  std::vector<double> sizes, lifetimes;
  for (const auto& c : campaigns) {
    sizes.push_back(static_cast<double>(c.size));
    lifetimes.push_back(static_cast<double>(c.lifetime_days));
  }
  return pearson_correlation(sizes, lifetimes);
}

GraphSummary summarize(const CampaignGraph& graph, const std::vector<Campaign>& campaigns) {
  GraphSummary s;
  s.domain_nodes = graph.domain_nodes().size();
  s.phone_nodes = graph.phone_nodes().size();
  s.edges = graph.edges().size();
  s.components = campaigns.size();
  for (const auto& [d, degree] : graph.domain_degrees()) s.max_domain_degree = std::max(s.max_domain_degree, degree);
  for (const auto& [p, degree] : graph.phone_degrees()) s.max_phone_degree = std::max(s.max_phone_degree, degree);
  // Every edge contributes one to a domain degree and one to a phone degree.
  if (s.domain_nodes > 0) s.avg_domain_degree = static_cast<double>(s.edges) / static_cast<double>(s.domain_nodes);
  if (s.phone_nodes > 0) s.avg_phone_degree = static_cast<double>(s.edges) / static_cast<double>(s.phone_nodes);
  double lifetime_total = 0.0;
  for (const auto& c : campaigns) {
    s.components_over_five += c.size > 5;
    lifetime_total += static_cast<double>(c.lifetime_days);
  }
  if (!campaigns.empty()) s.mean_campaign_lifetime = lifetime_total / static_cast<double>(campaigns.size());
  return s;
}

nlohmann::json to_json(const GraphSummary& s) {
  return {{"domain_nodes", s.domain_nodes},
          {"phone_nodes", s.phone_nodes},
          {"edges", s.edges},
          {"components", s.components},
          {"components_over_five", s.components_over_five},
          {"avg_domain_degree", s.avg_domain_degree},
          {"avg_phone_degree", s.avg_phone_degree},
          {"max_domain_degree", s.max_domain_degree},
          {"max_phone_degree", s.max_phone_degree},
          {"mean_campaign_lifetime", s.mean_campaign_lifetime}};
}

nlohmann::json campaign_row(const Campaign& campaign, const std::optional<CampaignInfrastructure>& infra) {
  nlohmann::json row = {{"domains", campaign.domain_count()},
                        {"phones", campaign.phone_count()},
                        {"tlds", campaign.tlds},
                        {"prefixes", campaign.toll_free_prefixes},
                        {"lifetime_days", campaign.lifetime_days},
                        {"representative", campaign.representative()}};
  if (infra) {
    row["ips"] = infra->ips;
    row["ases"] = infra->ases;
    row["countries"] = infra->countries;
    row["top_as_or_cdn"] = infra->top_as_or_cdn;
  }
  return row;
}

}  // namespace scamwatch::campaigns
