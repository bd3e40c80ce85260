#include "scamwatch/corpus/domains.hpp"

#include "scamwatch/bundled_data.hpp"
#include "scamwatch/common/error.hpp"
#include "scamwatch/common/text.hpp"

namespace scamwatch::corpus {

CdnList CdnList::parse(std::string_view content) {
  CdnList list;
  for (auto& entry : list_entries(content)) list.entries_.push_back(ascii_lower(entry));
  return list;
}

const CdnList& CdnList::bundled() {
  static const CdnList list = parse(bundled::kCdnDomains);
  return list;
}

bool CdnList::hosts(std::string_view hostname) const {
  std::string host = ascii_lower(hostname);
  if (!host.empty() && host.back() == '.') host.pop_back();
  for (const auto& entry : entries_) {
    if (host == entry) return true;
    if (host.size() > entry.size() && host.compare(host.size() - entry.size(), entry.size(), entry) == 0 &&
        host[host.size() - entry.size() - 1] == '.') {
      return true;
    }
  }
  return false;
}

std::string DomainContext::grouping_domain(std::string_view host) const {
  std::string canonical = ascii_lower(trim(host));
  if (!canonical.empty() && canonical.back() == '.') canonical.pop_back();
  if (is_ip_literal(canonical) || cdns->hosts(canonical)) return canonical;
  try {
    return suffixes->registrable_domain(canonical);
  } catch (const Error&) {
    return canonical;
  }
}

}  // namespace scamwatch::corpus
