#include "scamwatch/campaigns/graph.hpp"

#include "scamwatch/common/parallel.hpp"

namespace scamwatch::campaigns {
namespace {

template <typename Key>
void keep_min(std::map<Key, Timestamp>& map, const Key& key, Timestamp seen) {
  auto [it, inserted] = map.try_emplace(key, seen);
  if (!inserted && seen < it->second) it->second = seen;
}

void add_verdict(CampaignGraph& graph, const detector::Verdict& verdict, GraphLevel level,
                 const corpus::DomainContext& domains) {
  if (!verdict.is_scam) return;
  std::string domain = level == GraphLevel::fqdn ? verdict.host : domains.grouping_domain(verdict.host);
  graph.add_domain(domain, verdict.observed_at);
  for (const auto& phone : verdict.phones) {
    graph.add_phone(phone.digits, verdict.observed_at);
    graph.add_edge(domain, phone.digits, verdict.observed_at);
  }
}

}  // namespace

std::string_view to_string(NodeKind kind) { return kind == NodeKind::domain ? "domain" : "phone"; }

void CampaignGraph::add_domain(const std::string& domain, Timestamp seen) { keep_min(domains_, domain, seen); }

void CampaignGraph::add_phone(const std::string& phone, Timestamp seen) { keep_min(phones_, phone, seen); }

void CampaignGraph::add_edge(const std::string& domain, const std::string& phone, Timestamp seen) {
  keep_min(domains_, domain, seen);
  keep_min(phones_, phone, seen);
  keep_min(edges_, Edge{domain, phone}, seen);
}

void CampaignGraph::merge(const CampaignGraph& other) {
  for (const auto& [d, seen] : other.domains_) add_domain(d, seen);
  for (const auto& [p, seen] : other.phones_) add_phone(p, seen);
  for (const auto& [edge, seen] : other.edges_) keep_min(edges_, edge, seen);
}

Timestamp CampaignGraph::first_seen(const NodeRef& node) const {
  const auto& map = node.kind == NodeKind::domain ? domains_ : phones_;
  return map.at(node.id);
}

std::map<std::string, std::size_t> CampaignGraph::domain_degrees() const {
  std::map<std::string, std::size_t> out;
  for (const auto& [d, seen] : domains_) out[d] = 0;
  for (const auto& [edge, seen] : edges_) ++out[edge.first];
  return out;
}

std::map<std::string, std::size_t> CampaignGraph::phone_degrees() const {
  std::map<std::string, std::size_t> out;
  for (const auto& [p, seen] : phones_) out[p] = 0;
  for (const auto& [edge, seen] : edges_) ++out[edge.second];
  return out;
}

CampaignGraph build_graph(const std::vector<detector::Verdict>& verdicts, GraphLevel level,
                          const corpus::DomainContext& domains) {
  CampaignGraph graph;
  for (const auto& v : verdicts) add_verdict(graph, v, level, domains);
  return graph;
}

CampaignGraph build_graph_parallel(const std::vector<detector::Verdict>& verdicts, GraphLevel level,
                                   std::size_t parallelism, const corpus::DomainContext& domains) {
  std::size_t shards = std::max<std::size_t>(1, parallelism);
  auto partials = parallel_map(shards, shards, [&](std::size_t shard) {
    CampaignGraph graph;
    for (std::size_t i = shard; i < verdicts.size(); i += shards) add_verdict(graph, verdicts[i], level, domains);
    return graph;
  });
  CampaignGraph merged;
  for (const auto& partial : partials) merged.merge(partial);
  return merged;
}

CampaignGraph merge_by_etld1(const CampaignGraph& graph, const corpus::DomainContext& domains) {
  CampaignGraph merged;
  std::map<std::string, std::string> contracted;
  for (const auto& [d, seen] : graph.domain_nodes()) {
    auto key = domains.grouping_domain(d);
    contracted[d] = key;
    merged.add_domain(key, seen);
  }
  for (const auto& [p, seen] : graph.phone_nodes()) merged.add_phone(p, seen);
  for (const auto& [edge, seen] : graph.edges()) merged.add_edge(contracted.at(edge.first), edge.second, seen);
  return merged;
}

std::string export_edges_csv(const CampaignGraph& graph) {
  std::string out = "domain,phone,first_seen\n";
  for (const auto& [edge, seen] : graph.edges()) {
    out += edge.first + "," + edge.second + "," + format_timestamp(seen) + "\n";
  }
  return out;
}

std::string export_nodes_csv(const CampaignGraph& graph) {
  std::string out = "node,kind,first_seen\n";
  for (const auto& [d, seen] : graph.domain_nodes()) out += d + ",domain," + format_timestamp(seen) + "\n";
  for (const auto& [p, seen] : graph.phone_nodes()) out += p + ",phone," + format_timestamp(seen) + "\n";
  return out;
}

}  // namespace scamwatch::campaigns
