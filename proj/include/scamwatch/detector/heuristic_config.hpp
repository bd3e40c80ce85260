#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace scamwatch::detector {

// A phone number near a call-to-action word ("call", "dial") scores as one
// extra keyword.
struct PhoneProximityRule {
  std::string name = "call-near-phone";
  int weight = 3;
  std::size_t window = 60;  // max characters between the word and the number
  std::vector<std::string> triggers = {"call", "dial"};
};

struct PaddingRule {
  std::size_t min_length = 500;          // code points
  double min_whitespace_fraction = 0.2;  // of the dialog's code points
};

// Scoring configuration. Immutable once loaded; pass by const reference.
struct HeuristicConfig {
  int threshold = 6;
  std::map<std::string, int> keywords;  // lowercase, whitespace-normalised phrase -> weight
  PhoneProximityRule proximity;
  PaddingRule padding;
  std::vector<std::string> dynamic_markers;
  std::vector<std::string> campaign_key_names;
  std::set<std::string> toll_free_prefixes;

  // The bundled defaults (data/heuristics.json).
  static const HeuristicConfig& defaults();

  // Missing sections fall back to defaults(). Throws ParseError on wrong
  // types and InvalidArgument if validate() fails.
  static HeuristicConfig from_json(const nlohmann::json& object);
  static HeuristicConfig load(const std::filesystem::path& path);

  nlohmann::json to_json() const;

  // Throws InvalidArgument for a non-positive threshold or keyword weight.
  void validate() const;
};

}  // namespace scamwatch::detector
