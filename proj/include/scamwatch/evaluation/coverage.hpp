#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scamwatch/common/time.hpp"

namespace scamwatch::evaluation {

enum class EntryType { domain, ip, phone };

std::string_view to_string(EntryType type);
EntryType parse_entry_type(std::string_view text);

// Canonical form of a blacklist key: lowercase domains, IPs verbatim,
// phones as 10 NANP digits. Returns nullopt when the key is malformed.
std::optional<std::string> normalize_entry(std::string_view entry, EntryType type);

struct BlacklistEntry {
  EntryType type = EntryType::domain;
  Date date_added{};
  std::int64_t hits = 1;  // e.g. number of engines flagging the entry
};

struct BlacklistSnapshot {
  std::string name;
  std::map<std::string, BlacklistEntry> entries;
  std::vector<std::string> warnings;
};

// "entry,type,date_added[,hits]" rows with a header. A repeated entry keeps
// its earliest date. Malformed rows become warnings.
BlacklistSnapshot parse_blacklist_snapshot(std::string_view content, std::string name);

struct ItemLag {
  std::string item;
  std::int64_t lag_days = 0;  // blacklist date - detection date; negative when the list was first

  bool operator==(const ItemLag&) const = default;
};

struct CoverageReport {
  std::size_t total = 0;
  std::size_t covered = 0;
  double coverage_fraction = 0.0;
  std::vector<ItemLag> lags;  // covered items, sorted by item
  double mean_lag = 0.0;
  std::size_t listed_by_detection = 0;  // lag <= 0
  double mean_lag_after_detection = 0.0;  // over lag > 0
  double mean_hits = 0.0;                 // summed snapshot hits, averaged over covered items
};

// An item is covered when any snapshot lists it (restricted to `type` when
// given); its lag uses the earliest date_added across snapshots.
CoverageReport blacklist_coverage(const std::map<std::string, Date>& items,
                                  const std::vector<BlacklistSnapshot>& snapshots,
                                  std::optional<EntryType> type = std::nullopt);

// numerator/denominator rounded half-to-even at `decimals` places, exactly.
// Throws InvalidArgument for a zero or negative denominator.
std::string format_fraction(std::int64_t numerator, std::int64_t denominator, int decimals = 4);

struct PhoneDirectory {
  std::string name;
  std::set<std::string> numbers;
  std::vector<std::string> warnings;
};

// One 10-digit number per line; "//" comments and blank lines skipped.
PhoneDirectory parse_phone_directory(std::string_view content, std::string name);

struct DirectoryCoverage {
  std::string name;
  std::size_t covered = 0;
  double fraction = 0.0;
};

struct DirectoryCoverageReport {
  std::size_t total = 0;
  std::vector<DirectoryCoverage> directories;  // input order
  std::size_t union_covered = 0;
  double union_fraction = 0.0;
};

// Throws InvalidArgument("empty corpus") when `numbers` is empty.
DirectoryCoverageReport phone_directory_coverage(const std::set<std::string>& numbers,
                                                 const std::vector<PhoneDirectory>& directories);

nlohmann::json to_json(const CoverageReport& report);
nlohmann::json to_json(const DirectoryCoverageReport& report);

// Plain-text table: one row per directory with its share of numbers, then a
// "Together" row for the union.
std::string format_directory_table(const DirectoryCoverageReport& report);

}  // namespace scamwatch::evaluation
