#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scamwatch/common/time.hpp"
#include "scamwatch/corpus/domains.hpp"
#include "scamwatch/detector/verdict.hpp"

namespace scamwatch::campaigns {

enum class NodeKind { domain, phone };
enum class GraphLevel { fqdn, etld1 };

std::string_view to_string(NodeKind kind);

struct NodeRef {
  NodeKind kind = NodeKind::domain;
  std::string id;

  auto operator<=>(const NodeRef&) const = default;
};

// Timestamped bipartite domain <-> phone graph. A node's first_seen is the
// earliest observation of the node itself; an edge's is the earliest
// verdict advertising that phone on that domain. Re-adding a node or edge
// keeps the earlier timestamp. An edge counts as a sighting of both
// endpoints, so the result does not depend on insertion order.
class CampaignGraph {
 public:
  using Edge = std::pair<std::string, std::string>;  // (domain, phone)

  void add_domain(const std::string& domain, Timestamp seen);
  void add_phone(const std::string& phone, Timestamp seen);
  void add_edge(const std::string& domain, const std::string& phone, Timestamp seen);

  // Min-timestamp union.
  void merge(const CampaignGraph& other);

  const std::map<std::string, Timestamp>& domain_nodes() const { return domains_; }
  const std::map<std::string, Timestamp>& phone_nodes() const { return phones_; }
  const std::map<Edge, Timestamp>& edges() const { return edges_; }

  std::size_t node_count() const { return domains_.size() + phones_.size(); }
  Timestamp first_seen(const NodeRef& node) const;

  std::map<std::string, std::size_t> domain_degrees() const;
  std::map<std::string, std::size_t> phone_degrees() const;

  bool operator==(const CampaignGraph&) const = default;

 private:
  std::map<std::string, Timestamp> domains_;
  std::map<std::string, Timestamp> phones_;
  std::map<Edge, Timestamp> edges_;
};

// Graph of the scam verdicts only. At etld1 level each host is replaced by
// its grouping domain before insertion.
CampaignGraph build_graph(const std::vector<detector::Verdict>& verdicts, GraphLevel level,
                          const corpus::DomainContext& domains = {});

// Same result as build_graph, built from shards and merged.
CampaignGraph build_graph_parallel(const std::vector<detector::Verdict>& verdicts, GraphLevel level,
                                   std::size_t parallelism, const corpus::DomainContext& domains = {});

// Contracts fqdn-level domain nodes to grouping domains (CDN hosts stay
// whole). Merged nodes and collapsed parallel edges keep the minimum
// first_seen.
CampaignGraph merge_by_etld1(const CampaignGraph& graph, const corpus::DomainContext& domains = {});

// Edge list "domain,phone,first_seen" and node list "node,kind,first_seen",
// both with header rows and sorted.
std::string export_edges_csv(const CampaignGraph& graph);
std::string export_nodes_csv(const CampaignGraph& graph);

}  // namespace scamwatch::campaigns
