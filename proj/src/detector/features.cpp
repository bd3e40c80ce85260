#include "scamwatch/detector/features.hpp"

#include <array>
#include <cmath>

#include "scamwatch/common/text.hpp"

namespace scamwatch::detector {
namespace {

std::size_t whitespace_count(std::string_view text) {
  std::size_t n = 0;
  for (char c : text) {
    n += (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') ? 1 : 0;
  }
  return n;
}

}  // namespace

PageFeatures extract_page_features(const corpus::CrawlRecord& record, const PaddingRule& padding) {
  PageFeatures f;
  f.dialog_count = record.dialogs.size();
  for (const auto& dialog : record.dialogs) {
    std::size_t length = utf8_length(dialog.message);
    f.max_dialog_length = std::max(f.max_dialog_length, length);
    if (length > 0 && length >= padding.min_length) {
      double fraction = static_cast<double>(whitespace_count(dialog.message)) / static_cast<double>(length);
      if (fraction >= padding.min_whitespace_fraction) f.padded_dialog = true;
    }
  }
  f.audio_autoplay = record.audio_autoplay;
  f.onunload_hooked = record.onunload_hooked;
  f.popup_window_count = record.popup_window_count;
  return f;
}

double shannon_entropy(std::string_view label) {
  if (label.empty()) return 0.0;
  std::array<std::size_t, 256> counts{};
  for (char c : label) ++counts[static_cast<unsigned char>(c)];
  double entropy = 0.0;
  const double n = static_cast<double>(label.size());
  for (std::size_t count : counts) {
    if (count == 0) continue;
    double p = static_cast<double>(count) / n;
    entropy -= p * std::log2(p);
  }
  return entropy;
}

std::size_t longest_consonant_run(std::string_view label) {
  std::size_t best = 0, run = 0;
  for (char raw : label) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(raw)));
    bool consonant = c >= 'a' && c <= 'z' && std::string_view("aeiouy").find(c) == std::string_view::npos;
    run = consonant ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

DomainFeatures extract_domain_features(std::string_view fqdn, const corpus::DomainContext& domains,
                                       const DomainFeatureRules& rules) {
  DomainFeatures f;
  f.fqdn = corpus::canonical_hostname(fqdn);
  f.etld1 = domains.suffixes->registrable_domain(f.fqdn);
  f.length = utf8_length(f.fqdn);
  for (const auto& keyword : rules.scare_keywords) {
    if (f.fqdn.find(keyword) != std::string::npos) f.scare_keywords.insert(keyword);
  }
  std::string suffix = domains.suffixes->public_suffix(f.fqdn);
  std::string_view left = std::string_view(f.fqdn).substr(0, f.fqdn.size() - suffix.size() - 1);
  std::size_t pos = 0;
  while (pos <= left.size()) {
    std::size_t dot = left.find('.', pos);
    std::string_view label = left.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    if (shannon_entropy(label) >= rules.random_entropy_bits ||
        longest_consonant_run(label) >= rules.random_consonant_run) {
      f.has_random_label = true;
    }
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  f.cdn_hosted = domains.cdns->hosts(f.fqdn);
  return f;
}

nlohmann::json to_json(const PageFeatures& f) {
  return {{"dialog_count", f.dialog_count},     {"max_dialog_length", f.max_dialog_length},
          {"padded_dialog", f.padded_dialog},   {"audio_autoplay", f.audio_autoplay},
          {"onunload_hooked", f.onunload_hooked}, {"popup_window_count", f.popup_window_count}};
}

nlohmann::json to_json(const DomainFeatures& f) {
  return {{"fqdn", f.fqdn},
          {"etld1", f.etld1},
          {"length", f.length},
          {"scare_keywords", f.scare_keywords},
          {"has_random_label", f.has_random_label},
          {"cdn_hosted", f.cdn_hosted}};
}

}  // namespace scamwatch::detector
