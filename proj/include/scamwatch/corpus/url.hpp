#pragma once

#include <string>
#include <string_view>

namespace scamwatch::corpus {

// Absolute URL split into its RFC 3986 components. `host` is lowercased;
// `authority` keeps userinfo and port exactly as written.
struct Url {
  std::string scheme;
  std::string authority;
  std::string host;
  std::string path;      // begins with '/' unless empty
  std::string query;     // without the leading '?'
  std::string fragment;  // without the leading '#'
  bool has_query = false;
  bool has_fragment = false;

  std::string origin() const { return scheme + "://" + authority; }
};

// Throws ParseError for relative URLs or URLs without a host.
Url parse_url(std::string_view text);

std::string host_of(std::string_view url);

}  // namespace scamwatch::corpus
