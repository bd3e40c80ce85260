#include "scamwatch/corpus/url.hpp"

#include <cctype>

#include "scamwatch/common/error.hpp"
#include "scamwatch/common/text.hpp"

namespace scamwatch::corpus {

Url parse_url(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || text.substr(colon, 3) != "://") {
    throw ParseError("not an absolute URL: " + std::string(text));
  }
  Url url;
  for (std::size_t i = 0; i < colon; ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (!(std::isalnum(c) || c == '+' || c == '-' || c == '.') || (i == 0 && !std::isalpha(c))) {
      throw ParseError("invalid URL scheme: " + std::string(text));
    }
  }
  url.scheme = ascii_lower(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 3);

  std::size_t auth_end = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, auth_end);
  rest = auth_end == std::string_view::npos ? std::string_view{} : rest.substr(auth_end);

  std::string_view host = authority;
  if (auto at = host.rfind('@'); at != std::string_view::npos) host = host.substr(at + 1);
  if (!host.empty() && host.front() == '[') {
    auto close = host.find(']');
    if (close == std::string_view::npos) throw ParseError("unterminated IPv6 host: " + std::string(text));
    host = host.substr(0, close + 1);
  } else if (auto port = host.rfind(':'); port != std::string_view::npos) {
    host = host.substr(0, port);
  }
  if (host.empty()) throw ParseError("URL has no host: " + std::string(text));
  url.authority = std::string(authority);
  url.host = ascii_lower(host);

  if (auto hash = rest.find('#'); hash != std::string_view::npos) {
    url.fragment = std::string(rest.substr(hash + 1));
    url.has_fragment = true;
    rest = rest.substr(0, hash);
  }
  if (auto q = rest.find('?'); q != std::string_view::npos) {
    url.query = std::string(rest.substr(q + 1));
    url.has_query = true;
    rest = rest.substr(0, q);
  }
  url.path = std::string(rest);
  return url;
}

std::string host_of(std::string_view url) { return parse_url(url).host; }

}  // namespace scamwatch::corpus
