#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scamwatch/corpus/domains.hpp"

namespace scamwatch::attribution {

// A two-column mapping file ("domain,ip", "ip,as_name", "ip,country_code")
// with a header row. Malformed rows are skipped with a warning.
struct PairMap {
  std::map<std::string, std::string> entries;
  std::vector<std::string> warnings;

  const std::string* find(const std::string& key) const;
};

enum class PairMapKind { domain_ip, ip_as, ip_country };

PairMap parse_pair_map(std::string_view content, PairMapKind kind, std::string_view source_name = "map");

struct WhoisRecord {
  std::string domain;
  std::optional<std::string> email;  // lowercased; absent when the record lists none
};

struct WhoisTable {
  std::vector<WhoisRecord> records;
  std::vector<std::string> warnings;
};

// "domain,email" rows with a header; the email column may be empty.
WhoisTable parse_whois_emails(std::string_view content, std::string_view source_name = "whois");

struct DomainHosting {
  std::string domain;
  std::optional<std::string> ip;
  std::string as_name;  // "unknown" when unmapped
  std::string country;  // "unknown" when unmapped
  bool cloudflare = false;
  bool cdn_hosted = false;
};

struct InfraReport {
  std::vector<DomainHosting> domains;  // input order
  std::size_t mapped = 0;              // domains with an IP
  std::size_t unmapped = 0;
  std::map<std::string, double> country_histogram;  // over mapped domains
  std::map<std::string, double> as_histogram;
  double cloudflare_fraction = 0.0;
  double cdn_fraction = 0.0;
  std::size_t unique_ips = 0;
  std::vector<std::string> warnings;
};

const std::set<std::string>& default_cloudflare_as_names();

// Joins each domain with its IP, the IP's AS and country. Domains without an
// IP are counted as unmapped; all fractions are over the mapped ones. AS
// names match the Cloudflare set case-insensitively. Warnings of the input
// maps are carried into the report.
InfraReport aggregate_infrastructure(const std::vector<std::string>& domains, const PairMap& ip_map,
                                     const PairMap& as_map, const PairMap& geo_map,
                                     const corpus::CdnList& cdn_list = corpus::CdnList::bundled(),
                                     const std::set<std::string>& cloudflare_as_set = default_cloudflare_as_names());

nlohmann::json to_json(const InfraReport& report);

}  // namespace scamwatch::attribution
