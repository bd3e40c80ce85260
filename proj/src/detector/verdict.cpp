#include "scamwatch/detector/verdict.hpp"

#include "scamwatch/common/error.hpp"
#include "scamwatch/common/text.hpp"

namespace scamwatch::detector {
namespace {

using nlohmann::json;

json phones_json(const std::vector<PhoneNumber>& phones) {
  json out = json::array();
  for (const auto& p : phones) {
    out.push_back({{"digits", p.digits}, {"toll_free", p.toll_free}, {"source", to_string(p.source)}});
  }
  return out;
}

std::vector<PhoneNumber> phones_from(const json& array) {
  std::vector<PhoneNumber> out;
  for (const auto& p : array) {
    out.push_back({p.at("digits").get<std::string>(), p.at("toll_free").get<bool>(),
                   parse_phone_source(p.at("source").get<std::string>())});
  }
  return out;
}

}  // namespace

std::string_view to_string(MatchLocation location) {
  return location == MatchLocation::dialog ? "dialog" : "body";
}

json to_json(const Verdict& verdict) {
  json matches = json::array();
  for (const auto& m : verdict.matched_keywords) {
    matches.push_back({{"keyword", m.keyword}, {"tier", m.tier}, {"location", to_string(m.location)}});
  }
  json dynamic = nullptr;
  if (verdict.dynamic_delivery) {
    const auto& d = *verdict.dynamic_delivery;
    dynamic = {{"framework_marker", d.framework_marker},
               {"campaign_key", d.campaign_key ? json(*d.campaign_key) : json(nullptr)},
               {"default_numbers", phones_json(d.default_numbers)}};
  }
  return json{{"record_id", verdict.record_id},
              {"is_scam", verdict.is_scam},
              {"score", verdict.score},
              {"matched_keywords", std::move(matches)},
              {"phones", phones_json(verdict.phones)},
              {"dynamic_delivery", std::move(dynamic)},
              {"host", verdict.host},
              {"domain", verdict.domain},
              {"observed_at", format_timestamp(verdict.observed_at)}};
}

Verdict verdict_from_json(const json& object) {
  try {
    Verdict v;
    v.record_id = object.at("record_id").get<std::string>();
    v.is_scam = object.at("is_scam").get<bool>();
    v.score = object.at("score").get<int>();
    for (const auto& m : object.at("matched_keywords")) {
      std::string location = m.at("location").get<std::string>();
      if (location != "dialog" && location != "body") throw ParseError("unknown match location " + location);
      v.matched_keywords.push_back({m.at("keyword").get<std::string>(), m.at("tier").get<int>(),
                                    location == "dialog" ? MatchLocation::dialog : MatchLocation::body});
    }
    v.phones = phones_from(object.at("phones"));
    if (const auto& d = object.at("dynamic_delivery"); !d.is_null()) {
      DynamicNumberFinding finding;
      finding.framework_marker = d.at("framework_marker").get<std::string>();
      if (const auto& key = d.at("campaign_key"); !key.is_null()) finding.campaign_key = key.get<std::string>();
      finding.default_numbers = phones_from(d.at("default_numbers"));
      v.dynamic_delivery = std::move(finding);
    }
    v.host = object.at("host").get<std::string>();
    v.domain = object.at("domain").get<std::string>();
    v.observed_at = parse_timestamp(object.at("observed_at").get<std::string>());
    return v;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed verdict: ") + e.what());
  }
}

std::string serialize_verdicts(const std::vector<Verdict>& verdicts) {
  std::string out;
  for (const auto& v : verdicts) {
    out += to_json(v).dump();
    out += '\n';
  }
  return out;
}

std::vector<Verdict> parse_verdicts(std::string_view content) {
  std::vector<Verdict> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line =
        content.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() : nl + 1;
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(verdict_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError("verdict line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("verdict line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace scamwatch::detector
