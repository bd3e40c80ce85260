#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace scamwatch::attribution {

// WHOIS privacy/proxy registration services, matched on the email domain.
class PrivacyServiceList {
 public:
  static PrivacyServiceList parse(std::string_view content);
  static const PrivacyServiceList& bundled();

  bool covers(std::string_view email) const;

 private:
  std::vector<std::string> domains_;
};

struct EmailCluster {
  std::set<std::string> members;
  std::string representative;  // smallest member
  bool privacy_service = false;

  bool operator==(const EmailCluster&) const = default;
};

// Single-linkage clusters: two addresses join when their Levenshtein
// distance over the full string is strictly below `threshold`, closed
// transitively. Duplicates collapse; empty strings are ignored. Clusters are
// ordered by representative.
//
// Throws InvalidArgument if threshold < 1.
std::vector<EmailCluster> cluster_emails(const std::vector<std::string>& emails, std::size_t threshold = 5,
                                         std::size_t parallelism = 1,
                                         const PrivacyServiceList& privacy = PrivacyServiceList::bundled());

nlohmann::json to_json(const EmailCluster& cluster);

}  // namespace scamwatch::attribution
