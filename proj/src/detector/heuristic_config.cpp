#include "scamwatch/detector/heuristic_config.hpp"

#include "scamwatch/bundled_data.hpp"
#include "scamwatch/common/error.hpp"
#include "scamwatch/common/text.hpp"

namespace scamwatch::detector {
namespace {

using nlohmann::json;

std::vector<std::string> strings(const json& value, std::string_view what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw ParseError(std::string(what) + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

template <typename T>
T number(const json& object, std::string_view key, T fallback) {
  auto it = object.find(key);
  if (it == object.end()) return fallback;
  if (!it->is_number()) throw ParseError(std::string(key) + " must be a number");
  if constexpr (std::is_integral_v<T>) {
    if (!it->is_number_integer()) throw ParseError(std::string(key) + " must be an integer");
  }
  return it->get<T>();
}

HeuristicConfig parse(const json& object, const HeuristicConfig& base) {
  if (!object.is_object()) throw ParseError("heuristic config must be a JSON object");
  HeuristicConfig config = base;
  config.threshold = number<int>(object, "threshold", base.threshold);
  if (auto it = object.find("keywords"); it != object.end()) {
    if (!it->is_object()) throw ParseError("keywords must map phrases to weights");
    config.keywords.clear();
    for (const auto& [phrase, weight] : it->items()) {
      if (!weight.is_number_integer()) throw ParseError("weight of '" + phrase + "' must be an integer");
      config.keywords[ascii_lower(normalize_whitespace(phrase))] = weight.get<int>();
    }
  }
  if (auto it = object.find("phone_proximity"); it != object.end()) {
    if (!it->is_object()) throw ParseError("phone_proximity must be an object");
    if (auto name = it->find("name"); name != it->end()) {
      if (!name->is_string()) throw ParseError("phone_proximity.name must be a string");
      config.proximity.name = name->get<std::string>();
    }
    config.proximity.weight = number<int>(*it, "weight", base.proximity.weight);
    config.proximity.window = number<std::size_t>(*it, "window", base.proximity.window);
    if (auto triggers = it->find("triggers"); triggers != it->end()) {
      config.proximity.triggers.clear();
      for (auto& t : strings(*triggers, "phone_proximity.triggers")) {
        config.proximity.triggers.push_back(ascii_lower(t));
      }
    }
  }
  if (auto it = object.find("padding"); it != object.end()) {
    if (!it->is_object()) throw ParseError("padding must be an object");
    config.padding.min_length = number<std::size_t>(*it, "min_length", base.padding.min_length);
    config.padding.min_whitespace_fraction =
        number<double>(*it, "min_whitespace_fraction", base.padding.min_whitespace_fraction);
  }
  if (auto it = object.find("dynamic_markers"); it != object.end()) {
    config.dynamic_markers = strings(*it, "dynamic_markers");
  }
  if (auto it = object.find("campaign_key_names"); it != object.end()) {
    config.campaign_key_names = strings(*it, "campaign_key_names");
  }
  if (auto it = object.find("toll_free_prefixes"); it != object.end()) {
    auto prefixes = strings(*it, "toll_free_prefixes");
    config.toll_free_prefixes = {prefixes.begin(), prefixes.end()};
  }
  config.validate();
  return config;
}

}  // namespace

const HeuristicConfig& HeuristicConfig::defaults() {
  static const HeuristicConfig config = parse(json::parse(bundled::kDefaultHeuristics), HeuristicConfig{});
  return config;
}

HeuristicConfig HeuristicConfig::from_json(const json& object) { return parse(object, defaults()); }

HeuristicConfig HeuristicConfig::load(const std::filesystem::path& path) {
  json object;
  try {
    object = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ParseError("heuristic config " + path.string() + ": " + e.what());
  }
  return from_json(object);
}

json HeuristicConfig::to_json() const {
  return json{{"threshold", threshold},
              {"keywords", keywords},
              {"phone_proximity",
               {{"name", proximity.name},
                {"weight", proximity.weight},
                {"window", proximity.window},
                {"triggers", proximity.triggers}}},
              {"padding",
               {{"min_length", padding.min_length},
                {"min_whitespace_fraction", padding.min_whitespace_fraction}}},
              {"dynamic_markers", dynamic_markers},
              {"campaign_key_names", campaign_key_names},
              {"toll_free_prefixes", toll_free_prefixes}};
}

void HeuristicConfig::validate() const {
  if (threshold <= 0) throw InvalidArgument("threshold must be positive");
  for (const auto& [phrase, weight] : keywords) {
    if (phrase.empty()) throw InvalidArgument("empty keyword");
    if (weight <= 0) throw InvalidArgument("weight of '" + phrase + "' must be positive");
  }
  if (proximity.weight < 0) throw InvalidArgument("phone_proximity.weight must be non-negative");
  if (padding.min_whitespace_fraction < 0.0 || padding.min_whitespace_fraction > 1.0) {
    throw InvalidArgument("padding.min_whitespace_fraction must lie in [0, 1]");
  }
  for (const auto& prefix : toll_free_prefixes) {
    if (prefix.size() != 3) throw InvalidArgument("toll-free prefixes are 3 digits: " + prefix);
  }
}

}  // namespace scamwatch::detector
