#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scamwatch/corpus/crawl_record.hpp"
#include "scamwatch/corpus/domains.hpp"
#include "scamwatch/detector/heuristic_config.hpp"
#include "scamwatch/detector/verdict.hpp"

namespace scamwatch::detector {

// Looks for pay-per-call tracking code. The first script containing a
// marker (case-insensitive) and yielding a campaign key or fallback numbers
// produces the finding. The campaign key is the quoted value assigned to a
// configured key name nearest the marker.
std::optional<DynamicNumberFinding> detect_dynamic_number_delivery(
    const std::vector<std::string>& scripts, const HeuristicConfig& config = HeuristicConfig::defaults());

// Popup-gated keyword scoring. Pages without dialogs and popup windows are
// never scams. Otherwise each configured keyword found (whole-word,
// case-insensitive) in a dialog or in the visible body adds its weight once,
// as does a phone number near a call-to-action word. The page is a scam when
// the score reaches the threshold and a phone number or pay-per-call code is
// present.
//
// Throws InvalidArgument when the config is invalid.
Verdict score_page(const corpus::CrawlRecord& record, const HeuristicConfig& config,
                   const corpus::DomainContext& domains = {});

// score_page over many records; order and content independent of parallelism.
std::vector<Verdict> score_pages(const std::vector<corpus::CrawlRecord>& records, const HeuristicConfig& config,
                                 std::size_t parallelism = 1, const corpus::DomainContext& domains = {});

}  // namespace scamwatch::detector
