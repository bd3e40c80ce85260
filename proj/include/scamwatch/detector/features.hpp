#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scamwatch/corpus/crawl_record.hpp"
#include "scamwatch/corpus/domains.hpp"
#include "scamwatch/detector/heuristic_config.hpp"

namespace scamwatch::detector {

struct PageFeatures {
  std::size_t dialog_count = 0;
  std::size_t max_dialog_length = 0;  // code points
  bool padded_dialog = false;
  bool audio_autoplay = false;
  bool onunload_hooked = false;
  std::int64_t popup_window_count = 0;

  bool operator==(const PageFeatures&) const = default;
};

// A dialog is padded when it is at least `min_length` code points long and
// at least `min_whitespace_fraction` of them are whitespace.
PageFeatures extract_page_features(const corpus::CrawlRecord& record,
                                   const PaddingRule& padding = HeuristicConfig::defaults().padding);

struct DomainFeatureRules {
  std::vector<std::string> scare_keywords = {"techsupport", "alert", "pc", "security", "windows"};
  double random_entropy_bits = 3.5;
  std::size_t random_consonant_run = 5;
};

struct DomainFeatures {
  std::string fqdn;
  std::string etld1;
  std::size_t length = 0;
  std::set<std::string> scare_keywords;
  bool has_random_label = false;
  bool cdn_hosted = false;

  bool operator==(const DomainFeatures&) const = default;
};

// Shannon entropy of the byte distribution of `label`, in bits per character.
double shannon_entropy(std::string_view label);

// Longest run of ASCII consonants (letters other than a, e, i, o, u, y).
std::size_t longest_consonant_run(std::string_view label);

// Throws ParseError for malformed hostnames and InvalidArgument when the
// host has no registrable domain.
DomainFeatures extract_domain_features(std::string_view fqdn, const corpus::DomainContext& domains = {},
                                       const DomainFeatureRules& rules = {});

nlohmann::json to_json(const PageFeatures& features);
nlohmann::json to_json(const DomainFeatures& features);

}  // namespace scamwatch::detector
