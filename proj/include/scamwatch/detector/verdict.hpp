#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scamwatch/common/time.hpp"
#include "scamwatch/detector/phone.hpp"

namespace scamwatch::detector {

enum class MatchLocation { dialog, body };

std::string_view to_string(MatchLocation location);

struct KeywordMatch {
  std::string keyword;
  int tier = 0;  // the keyword's weight
  MatchLocation location = MatchLocation::dialog;

  bool operator==(const KeywordMatch&) const = default;
};

// Pay-per-call number delivery found in page scripts. At least one of
// campaign_key and default_numbers is set.
struct DynamicNumberFinding {
  std::string framework_marker;
  std::optional<std::string> campaign_key;
  std::vector<PhoneNumber> default_numbers;

  bool operator==(const DynamicNumberFinding&) const = default;
};

struct Verdict {
  std::string record_id;
  bool is_scam = false;
  int score = 0;
  std::vector<KeywordMatch> matched_keywords;
  std::vector<PhoneNumber> phones;
  std::optional<DynamicNumberFinding> dynamic_delivery;
  std::string host;    // host of the final URL
  std::string domain;  // grouping domain of `host` (registrable domain unless CDN-hosted)
  Timestamp observed_at{};

  bool operator==(const Verdict&) const = default;
};

nlohmann::json to_json(const Verdict& verdict);
Verdict verdict_from_json(const nlohmann::json& object);

// Line-delimited verdict file, one object per line.
std::string serialize_verdicts(const std::vector<Verdict>& verdicts);
std::vector<Verdict> parse_verdicts(std::string_view content);

}  // namespace scamwatch::detector
