#include "scamwatch/liveness/timeline_store.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

#include "scamwatch/common/error.hpp"
#include "scamwatch/common/text.hpp"

namespace scamwatch::liveness {
namespace {

using Key = std::pair<std::string, Date>;

std::map<Key, StoredObservation> latest_rows(const std::vector<StoredObservation>& rows) {
  std::map<Key, StoredObservation> latest;
  for (const auto& row : rows) {
    auto [it, inserted] = latest.try_emplace({row.domain, row.date}, row);
    if (!inserted && row.seq >= it->second.seq) it->second = row;
  }
  return latest;
}

}  // namespace

std::vector<StoredObservation> parse_timeline_store(std::string_view content) {
  std::vector<StoredObservation> rows;
  std::size_t pos = 0, line_no = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line =
        content.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() : nl + 1;
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      auto object = nlohmann::json::parse(line);
      StoredObservation row;
      row.domain = object.at("domain").get<std::string>();
      row.date = parse_date(object.at("date").get<std::string>());
      row.alive = object.at("alive").get<bool>();
      row.seq = object.value("seq", std::uint64_t{0});
      rows.push_back(std::move(row));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("timeline store line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("timeline store line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

std::string serialize_timeline_store(const std::vector<StoredObservation>& rows) {
  std::string out;
  for (const auto& row : rows) {
    nlohmann::json object = {
        {"domain", row.domain}, {"date", format_date(row.date)}, {"alive", row.alive}, {"seq", row.seq}};
    out += object.dump();
    out += '\n';
  }
  return out;
}

std::map<std::string, LivenessTimeline> replay_timeline_store(const std::vector<StoredObservation>& rows) {
  auto latest = latest_rows(rows);
  std::map<std::string, LivenessTimeline> timelines;
  // Keys are ordered by (domain, date), so the first row per domain is its earliest.
  for (const auto& [key, row] : latest) {
    auto it = timelines.try_emplace(row.domain, row.domain, row.date).first;
    it->second.record(row.date, row.alive);
  }
  return timelines;
}

std::vector<StoredObservation> apply_to_store(const std::vector<StoredObservation>& store,
                                              const std::vector<StoredObservation>& updates) {
  auto latest = latest_rows(store);
  std::uint64_t next_seq = 0;
  for (const auto& [key, row] : latest) next_seq = std::max(next_seq, row.seq + 1);
  for (const auto& update : updates) {
    auto it = latest.find({update.domain, update.date});
    if (it != latest.end() && it->second.alive == update.alive) continue;
    StoredObservation row = update;
    row.seq = next_seq++;
    latest[{row.domain, row.date}] = std::move(row);
  }
  std::vector<StoredObservation> out;
  out.reserve(latest.size());
  for (auto& [key, row] : latest) out.push_back(std::move(row));
  return out;
}

}  // namespace scamwatch::liveness
