#include "scamwatch/evaluation/coverage.hpp"

#include <algorithm>

#include "scamwatch/common/csv.hpp"
#include "scamwatch/common/error.hpp"
#include "scamwatch/common/text.hpp"
#include "scamwatch/corpus/public_suffix.hpp"

namespace scamwatch::evaluation {

std::string_view to_string(EntryType type) {
  switch (type) {
    case EntryType::domain: return "domain";
    case EntryType::ip: return "ip";
    case EntryType::phone: return "phone";
  }
  return "domain";
}

EntryType parse_entry_type(std::string_view text) {
  std::string lowered = ascii_lower(text);
  if (lowered == "domain") return EntryType::domain;
  if (lowered == "ip") return EntryType::ip;
  if (lowered == "phone") return EntryType::phone;
  throw ParseError("unknown entry type: " + std::string(text));
}

std::optional<std::string> normalize_entry(std::string_view entry, EntryType type) {
  std::string_view value = trim(entry);
  switch (type) {
    case EntryType::domain: {
      try {
        return corpus::canonical_hostname(value);
      } catch (const ParseError&) {
        return std::nullopt;
      }
    }
    case EntryType::ip:
      if (!corpus::is_ip_literal(value)) return std::nullopt;
      return std::string(value);
    case EntryType::phone: {
      std::string digits;
      for (char c : value) {
        if (c >= '0' && c <= '9') digits += c;
      }
      if (digits.size() == 11 && digits.front() == '1') digits.erase(0, 1);
      if (digits.size() != 10) return std::nullopt;
      return digits;
    }
  }
  return std::nullopt;
}

BlacklistSnapshot parse_blacklist_snapshot(std::string_view content, std::string name) {
  BlacklistSnapshot snapshot;
  snapshot.name = std::move(name);
  for (const auto& row : parse_csv(content).rows) {
    auto warn = [&](const std::string& why) {
      snapshot.warnings.push_back(snapshot.name + ":" + std::to_string(row.line) + ": " + why);
    };
    if (row.fields.size() != 3 && row.fields.size() != 4) {
      warn("expected entry,type,date_added[,hits]");
      continue;
    }
    try {
      BlacklistEntry entry;
      entry.type = parse_entry_type(row.fields[1]);
      entry.date_added = parse_date(row.fields[2]);
      if (row.fields.size() == 4) {
        std::size_t used = 0;
        entry.hits = std::stoll(row.fields[3], &used);
        if (used != row.fields[3].size() || entry.hits < 0) throw ParseError("bad hit count");
      }
      auto key = normalize_entry(row.fields[0], entry.type);
      if (!key) throw ParseError("malformed " + std::string(to_string(entry.type)) + " entry");
      auto [it, inserted] = snapshot.entries.try_emplace(*key, entry);
      if (!inserted && entry.date_added < it->second.date_added) it->second = entry;
    } catch (const std::exception& e) {
      warn(e.what());
    }
  }
  return snapshot;
}

CoverageReport blacklist_coverage(const std::map<std::string, Date>& items,
                                  const std::vector<BlacklistSnapshot>& snapshots, std::optional<EntryType> type) {
  CoverageReport report;
  report.total = items.size();
  double lag_sum = 0.0, after_sum = 0.0, hit_sum = 0.0;
  std::size_t after_count = 0;
  for (const auto& [item, detected] : items) {
    std::optional<Date> earliest;
    std::int64_t hits = 0;
    for (const auto& snapshot : snapshots) {
      auto it = snapshot.entries.find(item);
      if (it == snapshot.entries.end() || (type && it->second.type != *type)) continue;
      if (!earliest || it->second.date_added < *earliest) earliest = it->second.date_added;
      hits += it->second.hits;
    }
    if (!earliest) continue;
    ++report.covered;
    std::int64_t lag = days_between(detected, *earliest);
    report.lags.push_back({item, lag});
    lag_sum += static_cast<double>(lag);
    hit_sum += static_cast<double>(hits);
    if (lag <= 0) {
      ++report.listed_by_detection;
    } else {
      after_sum += static_cast<double>(lag);
      ++after_count;
    }
  }
  if (report.total > 0) {
    report.coverage_fraction = static_cast<double>(report.covered) / static_cast<double>(report.total);
  }
  if (report.covered > 0) {
    report.mean_lag = lag_sum / static_cast<double>(report.covered);
    report.mean_hits = hit_sum / static_cast<double>(report.covered);
  }
  if (after_count > 0) report.mean_lag_after_detection = after_sum / static_cast<double>(after_count);
  return report;
}

std::string format_fraction(std::int64_t numerator, std::int64_t denominator, int decimals) {
  if (denominator <= 0) throw InvalidArgument("denominator must be positive");
  if (decimals < 0 || decimals > 15) throw InvalidArgument("decimals must lie in [0, 15]");
  bool negative = numerator < 0;
  __int128 num = negative ? -static_cast<__int128>(numerator) : numerator;
  __int128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  __int128 scaled = num * scale;
  __int128 quotient = scaled / denominator;
  __int128 remainder = scaled % denominator;
  __int128 twice = remainder * 2;
  if (twice > denominator || (twice == denominator && quotient % 2 == 1)) ++quotient;

  std::string digits;
  __int128 q = quotient;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(q % 10)));
    q /= 10;
  } while (q > 0);
  while (static_cast<int>(digits.size()) <= decimals) digits.insert(digits.begin(), '0');
  std::string out = digits.substr(0, digits.size() - decimals);
  if (decimals > 0) out += "." + digits.substr(digits.size() - decimals);
  if (negative && quotient != 0) out.insert(out.begin(), '-');
  return out;
}

PhoneDirectory parse_phone_directory(std::string_view content, std::string name) {
  PhoneDirectory directory;
  directory.name = std::move(name);
  std::size_t line_no = 0, pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line = trim(content.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? content.size() : nl + 1;
    ++line_no;
    if (line.empty() || line.substr(0, 2) == "//") continue;
    auto digits = normalize_entry(line, EntryType::phone);
    if (!digits) {
      directory.warnings.push_back(directory.name + ":" + std::to_string(line_no) + ": not a 10-digit number");
      continue;
    }
    directory.numbers.insert(*digits);
  }
  return directory;
}

DirectoryCoverageReport phone_directory_coverage(const std::set<std::string>& numbers,
                                                 const std::vector<PhoneDirectory>& directories) {
  if (numbers.empty()) throw InvalidArgument("empty corpus");
  DirectoryCoverageReport report;
  report.total = numbers.size();
  const double n = static_cast<double>(report.total);
  std::set<std::string> covered_union;
  for (const auto& directory : directories) {
    DirectoryCoverage row{directory.name, 0, 0.0};
    for (const auto& number : numbers) {
      if (directory.numbers.count(number)) {
        ++row.covered;
        covered_union.insert(number);
      }
    }
    row.fraction = static_cast<double>(row.covered) / n;
    report.directories.push_back(std::move(row));
  }
  report.union_covered = covered_union.size();
  report.union_fraction = static_cast<double>(report.union_covered) / n;
  return report;
}

nlohmann::json to_json(const CoverageReport& report) {
  nlohmann::json lags = nlohmann::json::array();
  for (const auto& l : report.lags) lags.push_back({{"item", l.item}, {"lag_days", l.lag_days}});
  return {{"total", report.total},
          {"covered", report.covered},
          {"coverage_fraction",
           report.total > 0 ? format_fraction(static_cast<std::int64_t>(report.covered),
                                              static_cast<std::int64_t>(report.total))
                            : std::string("0.0000")},
          {"lags", std::move(lags)},
          {"mean_lag", report.mean_lag},
          {"listed_by_detection", report.listed_by_detection},
          {"mean_lag_after_detection", report.mean_lag_after_detection},
          {"mean_hits", report.mean_hits}};
}

nlohmann::json to_json(const DirectoryCoverageReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& d : report.directories) {
    rows.push_back({{"name", d.name},
                    {"covered", d.covered},
                    {"fraction", format_fraction(static_cast<std::int64_t>(d.covered),
                                                 static_cast<std::int64_t>(report.total))}});
  }
  return {{"total", report.total},
          {"directories", std::move(rows)},
          {"union_covered", report.union_covered},
          {"union_fraction", format_fraction(static_cast<std::int64_t>(report.union_covered),
                                             static_cast<std::int64_t>(report.total))}};
}

std::string format_directory_table(const DirectoryCoverageReport& report) {
  std::size_t width = 8;
  for (const auto& d : report.directories) width = std::max(width, d.name.size());
  auto line = [&](const std::string& name, std::size_t covered) {
    std::string percent = format_fraction(static_cast<std::int64_t>(covered) * 100,
                                          static_cast<std::int64_t>(report.total), 1);
    std::string padded = name + std::string(width - name.size(), ' ');
    return padded + " | " + percent + "%\n";
  };
  std::string out = "Database" + std::string(width - 8, ' ') + " | % numbers\n";
  for (const auto& d : report.directories) out += line(d.name, d.covered);
  out += line("Together", report.union_covered);
  return out;
}

}  // namespace scamwatch::evaluation
