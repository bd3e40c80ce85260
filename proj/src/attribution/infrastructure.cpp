#include "scamwatch/attribution/infrastructure.hpp"

#include <cctype>

#include "scamwatch/common/csv.hpp"
#include "scamwatch/common/text.hpp"
#include "scamwatch/corpus/public_suffix.hpp"

namespace scamwatch::attribution {
namespace {

std::string row_warning(std::string_view source, std::size_t line, std::string_view why) {
  return std::string(source) + ":" + std::to_string(line) + ": " + std::string(why);
}

bool valid_key(PairMapKind kind, const std::string& key) {
  if (kind == PairMapKind::domain_ip) return !key.empty();
  return corpus::is_ip_literal(key);
}

}  // namespace

const std::string* PairMap::find(const std::string& key) const {
  auto it = entries.find(key);
  return it == entries.end() ? nullptr : &it->second;
}

PairMap parse_pair_map(std::string_view content, PairMapKind kind, std::string_view source_name) {
  PairMap map;
  CsvTable table = parse_csv(content);
  for (const auto& row : table.rows) {
    if (row.fields.size() != 2) {
      map.warnings.push_back(row_warning(source_name, row.line, "expected 2 columns"));
      continue;
    }
    std::string key = row.fields[0];
    std::string value = row.fields[1];
    if (kind == PairMapKind::domain_ip) key = ascii_lower(key);
    if (!valid_key(kind, key) || value.empty()) {
      map.warnings.push_back(row_warning(source_name, row.line, "malformed row"));
      continue;
    }
    if (kind == PairMapKind::domain_ip && !corpus::is_ip_literal(value)) {
      map.warnings.push_back(row_warning(source_name, row.line, "not an IP address: " + value));
      continue;
    }
    if (kind == PairMapKind::ip_country) {
      for (char& c : value) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    map.entries[key] = value;
  }
  return map;
}

WhoisTable parse_whois_emails(std::string_view content, std::string_view source_name) {
  WhoisTable table;
  for (const auto& row : parse_csv(content).rows) {
    if (row.fields.empty() || row.fields.size() > 2 || row.fields[0].empty()) {
      table.warnings.push_back(row_warning(source_name, row.line, "expected domain,email"));
      continue;
    }
    WhoisRecord record{ascii_lower(row.fields[0]), std::nullopt};
    if (row.fields.size() == 2 && !row.fields[1].empty()) {
      if (row.fields[1].find('@') == std::string::npos) {
        table.warnings.push_back(row_warning(source_name, row.line, "not an email address"));
        continue;
      }
      record.email = ascii_lower(row.fields[1]);
    }
    table.records.push_back(std::move(record));
  }
  return table;
}

const std::set<std::string>& default_cloudflare_as_names() {
  static const std::set<std::string> names = {"cloudflarenet", "cloudflare", "cloudflare, inc.", "as13335"};
  return names;
}

InfraReport aggregate_infrastructure(const std::vector<std::string>& domains, const PairMap& ip_map,
                                     const PairMap& as_map, const PairMap& geo_map, const corpus::CdnList& cdn_list,
                                     const std::set<std::string>& cloudflare_as_set) {
  InfraReport report;
  for (const auto* map : {&ip_map, &as_map, &geo_map}) {
    report.warnings.insert(report.warnings.end(), map->warnings.begin(), map->warnings.end());
  }
  std::set<std::string> cloudflare;
  for (const auto& name : cloudflare_as_set) cloudflare.insert(ascii_lower(name));

  std::map<std::string, std::size_t> countries, ases;
  std::set<std::string> ips;
  std::size_t cloudflare_count = 0, cdn_count = 0;
  for (const auto& raw : domains) {
    DomainHosting hosting;
    hosting.domain = ascii_lower(raw);
    hosting.cdn_hosted = cdn_list.hosts(hosting.domain);
    const std::string* ip = ip_map.find(hosting.domain);
    if (!ip) {
      hosting.as_name = "unknown";
      hosting.country = "unknown";
      ++report.unmapped;
      report.domains.push_back(std::move(hosting));
      continue;
    }
    ++report.mapped;
    hosting.ip = *ip;
    ips.insert(*ip);
    const std::string* as_name = as_map.find(*ip);
    const std::string* country = geo_map.find(*ip);
    hosting.as_name = as_name ? *as_name : "unknown";
    hosting.country = country ? *country : "unknown";
    hosting.cloudflare = as_name && cloudflare.count(ascii_lower(*as_name)) > 0;
    ++countries[hosting.country];
    ++ases[hosting.as_name];
    cloudflare_count += hosting.cloudflare;
    cdn_count += hosting.cdn_hosted;
    report.domains.push_back(std::move(hosting));
  }
  report.unique_ips = ips.size();
  if (report.mapped > 0) {
    const double n = static_cast<double>(report.mapped);
    for (const auto& [k, c] : countries) report.country_histogram[k] = static_cast<double>(c) / n;
    for (const auto& [k, c] : ases) report.as_histogram[k] = static_cast<double>(c) / n;
    report.cloudflare_fraction = static_cast<double>(cloudflare_count) / n;
    report.cdn_fraction = static_cast<double>(cdn_count) / n;
  }
  return report;
}

nlohmann::json to_json(const InfraReport& report) {
  nlohmann::json domains = nlohmann::json::array();
  for (const auto& d : report.domains) {
    domains.push_back({{"domain", d.domain},
                       {"ip", d.ip ? nlohmann::json(*d.ip) : nlohmann::json(nullptr)},
                       {"as_name", d.as_name},
                       {"country", d.country},
                       {"cloudflare", d.cloudflare},
                       {"cdn_hosted", d.cdn_hosted}});
  }
  return {{"domains", std::move(domains)},
          {"mapped", report.mapped},
          {"unmapped", report.unmapped},
          {"country_histogram", report.country_histogram},
          {"as_histogram", report.as_histogram},
          {"cloudflare_fraction", report.cloudflare_fraction},
          {"cdn_fraction", report.cdn_fraction},
          {"unique_ips", report.unique_ips},
          {"warnings", report.warnings}};
}

}  // namespace scamwatch::attribution
