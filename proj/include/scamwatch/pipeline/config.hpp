#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "scamwatch/common/error.hpp"
#include "scamwatch/common/time.hpp"

namespace scamwatch::pipeline {

enum class Transport { replay, live };

// Raised for unusable configuration; the CLI maps it to exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct PipelineConfig {
  std::filesystem::path corpus;  // crawl records, one JSON object per line
  std::optional<std::filesystem::path> heuristics;
  std::optional<std::filesystem::path> suffix_list;
  std::optional<std::filesystem::path> cdn_list;
  std::optional<std::filesystem::path> privacy_list;
  std::optional<std::filesystem::path> ip_map;   // domain,ip
  std::optional<std::filesystem::path> as_map;   // ip,as_name
  std::optional<std::filesystem::path> geo_map;  // ip,country_code
  std::optional<std::filesystem::path> whois_emails;
  std::vector<std::filesystem::path> blacklists;
  std::vector<std::filesystem::path> directories;
  std::optional<std::filesystem::path> modstatus_dir;
  std::optional<std::filesystem::path> call_durations;  // one value in minutes per line
  std::optional<std::filesystem::path> replay_dir;
  std::optional<std::set<std::string>> cloudflare_as;

  std::filesystem::path out = "out";
  std::size_t parallelism = 1;
  Transport transport = Transport::replay;
  std::optional<Date> date;  // logical "today" for liveness

  double conversion_rate = 0.02;
  double avg_price = 290.0;
  std::size_t email_threshold = 5;
  int retire_after_dead_days = 30;
  std::size_t top_campaigns = 10;
};

// Relative paths are resolved against `base_dir`. Unknown keys are errors.
PipelineConfig config_from_json(const nlohmann::json& object, const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& path);

// Every input path the config refers to, in a fixed order.
std::vector<std::filesystem::path> referenced_inputs(const PipelineConfig& config);

// Throws ConfigError("missing input: <path>") for the first referenced path
// that does not exist, and for out-of-range settings.
void check_config(const PipelineConfig& config);

}  // namespace scamwatch::pipeline
