#include "scamwatch/pipeline/config.hpp"

#include <type_traits>

#include "scamwatch/common/text.hpp"

namespace scamwatch::pipeline {
namespace {

namespace fs = std::filesystem;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "corpus",       "heuristics",    "suffix_list",     "cdn_list",        "privacy_list",
      "ip_map",       "as_map",        "geo_map",         "whois_emails",    "blacklists",
      "directories",  "modstatus_dir", "call_durations",  "replay_dir",      "cloudflare_as",
      "out",          "parallelism",   "transport",       "date",            "conversion_rate",
      "avg_price",    "email_threshold", "retire_after_dead_days", "top_campaigns"};
  return keys;
}

fs::path resolve(const nlohmann::json& value, const fs::path& base, const std::string& key) {
  if (!value.is_string() || value.get<std::string>().empty()) throw ConfigError(key + ": expected a path");
  fs::path p = value.get<std::string>();
  return p.is_absolute() ? p : (base / p).lexically_normal();
}

template <typename T>
T number(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number()) throw ConfigError(key + ": expected a number");
  if constexpr (std::is_integral_v<T>) {
    if (!value.is_number_integer()) throw ConfigError(key + ": expected an integer");
    if (std::is_unsigned_v<T> && !value.is_number_unsigned()) throw ConfigError(key + ": must not be negative");
  }
  return value.get<T>();
}

}  // namespace

PipelineConfig config_from_json(const nlohmann::json& object, const fs::path& base_dir) {
  if (!object.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : object.items()) {
    if (!known_keys().contains(key)) throw ConfigError("unknown config key: " + key);
  }
  if (!object.contains("corpus")) throw ConfigError("config lacks \"corpus\"");

  PipelineConfig config;
  config.corpus = resolve(object["corpus"], base_dir, "corpus");
  auto optional_path = [&](const char* key, std::optional<fs::path>& target) {
    if (object.contains(key)) target = resolve(object[key], base_dir, key);
  };
  optional_path("heuristics", config.heuristics);
  optional_path("suffix_list", config.suffix_list);
  optional_path("cdn_list", config.cdn_list);
  optional_path("privacy_list", config.privacy_list);
  optional_path("ip_map", config.ip_map);
  optional_path("as_map", config.as_map);
  optional_path("geo_map", config.geo_map);
  optional_path("whois_emails", config.whois_emails);
  optional_path("modstatus_dir", config.modstatus_dir);
  optional_path("call_durations", config.call_durations);
  optional_path("replay_dir", config.replay_dir);

  for (const char* key : {"blacklists", "directories"}) {
    if (!object.contains(key)) continue;
    if (!object[key].is_array()) throw ConfigError(std::string(key) + ": expected a list of paths");
    auto& target = std::string(key) == "blacklists" ? config.blacklists : config.directories;
    for (const auto& entry : object[key]) target.push_back(resolve(entry, base_dir, key));
  }
  if (object.contains("cloudflare_as")) {
    const auto& names = object["cloudflare_as"];
    if (!names.is_array()) throw ConfigError("cloudflare_as: expected a list of AS names");
    std::set<std::string> set;
    for (const auto& name : names) {
      if (!name.is_string()) throw ConfigError("cloudflare_as: expected strings");
      set.insert(ascii_lower(name.get<std::string>()));
    }
    config.cloudflare_as = std::move(set);
  }
  if (object.contains("out")) config.out = resolve(object["out"], base_dir, "out");
  if (object.contains("parallelism")) config.parallelism = number<std::size_t>(object["parallelism"], "parallelism");
  if (object.contains("transport")) {
    const auto& t = object["transport"];
    if (t == "replay") {
      config.transport = Transport::replay;
    } else if (t == "live") {
      config.transport = Transport::live;
    } else {
      throw ConfigError("transport: expected \"replay\" or \"live\"");
    }
  }
  if (object.contains("date")) {
    if (!object["date"].is_string()) throw ConfigError("date: expected YYYY-MM-DD");
    try {
      config.date = parse_date(object["date"].get<std::string>());
    } catch (const ParseError& e) {
      throw ConfigError(std::string("date: ") + e.what());
    }
  }
  if (object.contains("conversion_rate")) config.conversion_rate = number<double>(object["conversion_rate"], "conversion_rate");
  if (object.contains("avg_price")) config.avg_price = number<double>(object["avg_price"], "avg_price");
  if (object.contains("email_threshold")) {
    config.email_threshold = number<std::size_t>(object["email_threshold"], "email_threshold");
  }
  if (object.contains("retire_after_dead_days")) {
    config.retire_after_dead_days = number<int>(object["retire_after_dead_days"], "retire_after_dead_days");
  }
  if (object.contains("top_campaigns")) config.top_campaigns = number<std::size_t>(object["top_campaigns"], "top_campaigns");
  return config;
}

PipelineConfig load_config(const fs::path& path) {
  if (!fs::exists(path)) throw ConfigError("missing input: " + path.string());
  nlohmann::json object;
  try {
    object = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return config_from_json(object, path.parent_path());
}

std::vector<fs::path> referenced_inputs(const PipelineConfig& config) {
  std::vector<fs::path> paths{config.corpus};
  for (const auto* p : {&config.heuristics, &config.suffix_list, &config.cdn_list, &config.privacy_list,
                        &config.ip_map, &config.as_map, &config.geo_map, &config.whois_emails}) {
    if (*p) paths.push_back(**p);
  }
  paths.insert(paths.end(), config.blacklists.begin(), config.blacklists.end());
  paths.insert(paths.end(), config.directories.begin(), config.directories.end());
  for (const auto* p : {&config.modstatus_dir, &config.call_durations}) {
    if (*p) paths.push_back(**p);
  }
  if (config.replay_dir && config.transport == Transport::replay) paths.push_back(*config.replay_dir);
  return paths;
}

void check_config(const PipelineConfig& config) {
  for (const auto& path : referenced_inputs(config)) {
    if (!fs::exists(path)) throw ConfigError("missing input: " + path.string());
  }
  if (config.parallelism < 1) throw ConfigError("parallelism must be at least 1");
  if (config.email_threshold < 1) throw ConfigError("email_threshold must be at least 1");
  if (config.retire_after_dead_days < 1) throw ConfigError("retire_after_dead_days must be at least 1");
  if (!(config.conversion_rate >= 0.0 && config.conversion_rate <= 1.0)) {
    throw ConfigError("conversion_rate must be within [0, 1]");
  }
  if (!(config.avg_price >= 0.0)) throw ConfigError("avg_price must not be negative");
}

}  // namespace scamwatch::pipeline
