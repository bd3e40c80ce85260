#pragma once

#include <string>
#include <string_view>
#include <unordered_set>

namespace scamwatch::corpus {

// Public-suffix rules loaded from a snapshot file ("//" comments, one rule
// per line, "*." wildcards and "!" exceptions). Lookups follow the standard
// prevailing-rule algorithm with an implicit "*" default.
class PublicSuffixList {
 public:
  static PublicSuffixList parse(std::string_view content);

  // The snapshot compiled into the library.
  static const PublicSuffixList& bundled();

  std::string public_suffix(std::string_view hostname) const;

  // eTLD+1. Throws InvalidArgument("no registrable domain") when the host is
  // itself a public suffix and ParseError for malformed hostnames.
  std::string registrable_domain(std::string_view hostname) const;

  std::size_t rule_count() const { return rules_.size() + wildcards_.size() + exceptions_.size(); }

 private:
  std::unordered_set<std::string> rules_;
  std::unordered_set<std::string> wildcards_;   // stored without the "*."
  std::unordered_set<std::string> exceptions_;  // stored without the "!"
};

// Lowercase, strip one trailing dot, and check label syntax. Throws
// ParseError on failure.
std::string canonical_hostname(std::string_view hostname);

bool is_ip_literal(std::string_view host);

// Registrable domain under the bundled snapshot.
std::string etld1(std::string_view fqdn);

}  // namespace scamwatch::corpus
