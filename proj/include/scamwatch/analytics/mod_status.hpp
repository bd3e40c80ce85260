#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scamwatch/common/time.hpp"

namespace scamwatch::analytics {

// One scrape of an exposed Apache server-status page.
struct ModStatusSample {
  std::string domain;
  Timestamp sampled_at{};
  std::vector<std::string> client_ips;  // one per worker row, verbatim
  std::optional<std::int64_t> total_accesses;
  std::optional<std::int64_t> uptime_seconds;

  bool operator==(const ModStatusSample&) const = default;
};

// Reads the extended worker table: the table whose header row has cells
// named "Client" and "Request". Every Client cell that is an IPv4/IPv6
// address is listed. "Total accesses" and "Server uptime" are scraped when
// present. The plain-text "?auto" variant yields the scalars only.
//
// Throws ParseError("not a server-status page") otherwise. Domain and
// sampled_at are left empty.
ModStatusSample parse_mod_status(std::string_view html);

// Parses "<root>/<domain>/<timestamp>.html", where the timestamp is
// "YYYY-MM-DDTHH:MM:SSZ" or Unix seconds.
ModStatusSample load_mod_status_file(const std::filesystem::path& file);

struct ModStatusLoad {
  std::vector<ModStatusSample> samples;  // sorted by (domain, sampled_at)
  std::vector<std::string> errors;       // files that failed to parse
};

// Every "*.html" file one level below `root`.
ModStatusLoad load_mod_status_tree(const std::filesystem::path& root);

}  // namespace scamwatch::analytics
