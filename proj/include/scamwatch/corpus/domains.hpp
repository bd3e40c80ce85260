#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scamwatch/corpus/public_suffix.hpp"

namespace scamwatch::corpus {

// Hosting domains run by CDNs. A host is CDN-hosted when it equals an entry
// or ends with "." + entry.
class CdnList {
 public:
  static CdnList parse(std::string_view content);
  static const CdnList& bundled();

  bool hosts(std::string_view hostname) const;
  const std::vector<std::string>& entries() const { return entries_; }

 private:
  std::vector<std::string> entries_;
};

// Reference data used to key hosts by the domain that owns them.
struct DomainContext {
  const PublicSuffixList* suffixes = &PublicSuffixList::bundled();
  const CdnList* cdns = &CdnList::bundled();

  // Registrable domain of `host`, except that CDN-hosted hosts key to
  // themselves (every CDN customer shares the CDN's registrable domain) and
  // hosts with no registrable domain (IP literals, bare suffixes) key to
  // the canonical host.
  std::string grouping_domain(std::string_view host) const;
};

}  // namespace scamwatch::corpus
