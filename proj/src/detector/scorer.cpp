#include "scamwatch/detector/scorer.hpp"

#include <cctype>
#include <limits>
#include <unordered_set>

#include "scamwatch/common/error.hpp"
#include "scamwatch/common/parallel.hpp"
#include "scamwatch/common/text.hpp"
#include "scamwatch/corpus/url.hpp"

namespace scamwatch::detector {
namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Offsets of whole-word occurrences of `word` in `text`.
std::vector<std::size_t> word_occurrences(std::string_view text, std::string_view word) {
  std::vector<std::size_t> out;
  if (word.empty()) return out;
  std::size_t pos = text.find(word);
  while (pos != std::string_view::npos) {
    bool left = pos == 0 || !is_word_char(text[pos - 1]) || !is_word_char(word.front());
    std::size_t end = pos + word.size();
    bool right = end == text.size() || !is_word_char(text[end]) || !is_word_char(word.back());
    if (left && right) out.push_back(pos);
    pos = text.find(word, pos + 1);
  }
  return out;
}

bool contains_word(std::string_view text, std::string_view word) { return !word_occurrences(text, word).empty(); }

bool phone_near_trigger(std::string_view text, const PhoneProximityRule& rule) {
  auto phones = find_phone_numbers(text);
  if (phones.empty()) return false;
  for (const auto& trigger : rule.triggers) {
    for (std::size_t t : word_occurrences(text, trigger)) {
      std::size_t t_end = t + trigger.size();
      for (const auto& p : phones) {
        std::size_t gap = p.begin >= t_end ? p.begin - t_end : (t >= p.end ? t - p.end : 0);
        if (gap <= rule.window) return true;
      }
    }
  }
  return false;
}

// Quoted value assigned to `name` at `pos` ("name: 'v'", "name = \"v\"").
std::optional<std::string> assigned_value(std::string_view script, std::size_t pos, std::size_t name_len) {
  std::size_t i = pos + name_len;
  auto skip_ws = [&] {
    while (i < script.size() && std::isspace(static_cast<unsigned char>(script[i]))) ++i;
  };
  if (i < script.size() && (script[i] == '"' || script[i] == '\'')) ++i;  // quoted object key
  skip_ws();
  if (i >= script.size() || (script[i] != ':' && script[i] != '=')) return std::nullopt;
  ++i;
  skip_ws();
  if (i >= script.size()) return std::nullopt;
  char quote = script[i];
  if (quote != '"' && quote != '\'' && quote != '`') return std::nullopt;
  std::size_t close = script.find(quote, i + 1);
  if (close == std::string_view::npos || close == i + 1) return std::nullopt;
  return std::string(script.substr(i + 1, close - i - 1));
}

std::optional<std::string> nearest_campaign_key(std::string_view script, std::size_t marker_pos,
                                                const std::vector<std::string>& key_names) {
  std::optional<std::string> best;
  std::size_t best_distance = std::numeric_limits<std::size_t>::max();
  for (const auto& name : key_names) {
    for (std::size_t pos : word_occurrences(script, name)) {
      auto value = assigned_value(script, pos, name.size());
      if (!value) continue;
      std::size_t distance = pos > marker_pos ? pos - marker_pos : marker_pos - pos;
      if (distance < best_distance) {
        best_distance = distance;
        best = std::move(value);
      }
    }
  }
  return best;
}

void add_phones(std::vector<PhoneNumber>& into, std::unordered_set<std::string>& seen,
                std::vector<PhoneNumber> found) {
  for (auto& p : found) {
    if (seen.insert(p.digits).second) into.push_back(std::move(p));
  }
}

}  // namespace

std::optional<DynamicNumberFinding> detect_dynamic_number_delivery(const std::vector<std::string>& scripts,
                                                                   const HeuristicConfig& config) {
  for (const auto& script : scripts) {
    std::string lowered = ascii_lower(script);
    for (const auto& marker : config.dynamic_markers) {
      std::size_t pos = lowered.find(ascii_lower(marker));
      if (pos == std::string::npos) continue;
      DynamicNumberFinding finding;
      finding.framework_marker = marker;
      finding.campaign_key = nearest_campaign_key(script, pos, config.campaign_key_names);
      finding.default_numbers =
          extract_phone_numbers(script, PhoneSource::script_default, config.toll_free_prefixes);
      if (finding.campaign_key || !finding.default_numbers.empty()) return finding;
      break;  // other markers in the same script would find the same key and numbers
    }
  }
  return std::nullopt;
}

Verdict score_page(const corpus::CrawlRecord& record, const HeuristicConfig& config,
                   const corpus::DomainContext& domains) {
  config.validate();
  Verdict verdict;
  verdict.record_id = record.record_id;
  verdict.observed_at = record.observed_at;
  verdict.host = corpus::host_of(record.final_url);
  verdict.domain = domains.grouping_domain(verdict.host);

  if (record.dialogs.empty() && record.popup_window_count == 0) return verdict;

  std::vector<std::string> dialog_texts;
  for (const auto& d : record.dialogs) dialog_texts.push_back(ascii_lower(normalize_whitespace(d.message)));
  std::string body = ascii_lower(normalize_whitespace(visible_text(record.html)));

  for (const auto& [keyword, weight] : config.keywords) {
    bool in_dialog = false;
    for (const auto& text : dialog_texts) in_dialog = in_dialog || contains_word(text, keyword);
    if (in_dialog || contains_word(body, keyword)) {
      verdict.matched_keywords.push_back(
          {keyword, weight, in_dialog ? MatchLocation::dialog : MatchLocation::body});
      verdict.score += weight;
    }
  }
  if (config.proximity.weight > 0) {
    bool in_dialog = false;
    for (const auto& text : dialog_texts) in_dialog = in_dialog || phone_near_trigger(text, config.proximity);
    if (in_dialog || phone_near_trigger(body, config.proximity)) {
      verdict.matched_keywords.push_back({config.proximity.name, config.proximity.weight,
                                          in_dialog ? MatchLocation::dialog : MatchLocation::body});
      verdict.score += config.proximity.weight;
    }
  }

  std::unordered_set<std::string> seen;
  for (const auto& d : record.dialogs) {
    add_phones(verdict.phones, seen, extract_phone_numbers(d.message, PhoneSource::dialog, config.toll_free_prefixes));
  }
  add_phones(verdict.phones, seen, extract_phone_numbers(body, PhoneSource::body, config.toll_free_prefixes));
  verdict.dynamic_delivery = detect_dynamic_number_delivery(record.scripts, config);
  if (verdict.dynamic_delivery) add_phones(verdict.phones, seen, verdict.dynamic_delivery->default_numbers);
  for (const auto& script : record.scripts) {
    add_phones(verdict.phones, seen,
               extract_phone_numbers(script, PhoneSource::script_dynamic, config.toll_free_prefixes));
  }

  verdict.is_scam =
      verdict.score >= config.threshold && (!verdict.phones.empty() || verdict.dynamic_delivery.has_value());
  return verdict;
}

std::vector<Verdict> score_pages(const std::vector<corpus::CrawlRecord>& records, const HeuristicConfig& config,
                                 std::size_t parallelism, const corpus::DomainContext& domains) {
  config.validate();
  return parallel_map(records.size(), parallelism,
                      [&](std::size_t i) { return score_page(records[i], config, domains); });
}

}  // namespace scamwatch::detector
