#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scamwatch/common/time.hpp"

namespace scamwatch::corpus {

enum class DialogKind { alert, confirm, prompt };

std::string_view to_string(DialogKind kind);
DialogKind parse_dialog_kind(std::string_view text);

struct DialogEvent {
  DialogKind kind = DialogKind::alert;
  std::string message;
  int ordinal = 1;  // 1-based, strictly increasing within a record

  bool operator==(const DialogEvent&) const = default;
};

// One instrumented page visit.
struct CrawlRecord {
  std::string record_id;
  std::string seed_url;
  std::string final_url;
  std::string vantage;
  Timestamp observed_at{};
  int http_status = 0;
  std::vector<std::string> redirect_chain;
  std::string html;
  std::vector<std::string> scripts;
  std::vector<DialogEvent> dialogs;
  bool onunload_hooked = false;
  bool audio_autoplay = false;
  std::int64_t popup_window_count = 0;

  bool operator==(const CrawlRecord&) const = default;
};

// Throws ParseError naming the first violated invariant.
void validate(const CrawlRecord& record);

// Strict decode: every field must be present with the right type, and no
// other fields are allowed.
CrawlRecord record_from_json(const nlohmann::json& object);
nlohmann::json to_json(const CrawlRecord& record);

// Single line, no trailing newline.
std::string serialize_record(const CrawlRecord& record);

struct IngestError {
  std::size_t line = 0;  // 1-based
  std::string reason;
};

struct IngestResult {
  std::vector<CrawlRecord> records;
  std::vector<IngestError> errors;
};

// Line-delimited ingest. Blank lines are skipped; malformed lines become
// IngestErrors; input order is preserved regardless of `parallelism`.
IngestResult ingest_crawl_records(std::string_view content, std::size_t parallelism = 1);

// Throws Error when the stream cannot be read.
IngestResult ingest_crawl_records(std::istream& source, std::size_t parallelism = 1);

}  // namespace scamwatch::corpus
