#include "scamwatch/corpus/crawl_record.hpp"

#include <array>
#include <istream>
#include <optional>
#include <sstream>

#include "scamwatch/common/error.hpp"
#include "scamwatch/common/parallel.hpp"
#include "scamwatch/common/text.hpp"
#include "scamwatch/corpus/url.hpp"

namespace scamwatch::corpus {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 13> kFields = {
    "record_id", "seed_url", "final_url", "vantage", "observed_at", "http_status",
    "redirect_chain", "html", "scripts", "dialogs", "onunload_hooked", "audio_autoplay",
    "popup_window_count"};

const json& field(const json& object, std::string_view name) {
  auto it = object.find(name);
  if (it == object.end()) throw ParseError("missing field " + std::string(name));
  return *it;
}

std::string string_field(const json& object, std::string_view name) {
  const json& value = field(object, name);
  if (!value.is_string()) throw ParseError("field " + std::string(name) + " must be a string");
  return value.get<std::string>();
}

bool bool_field(const json& object, std::string_view name) {
  const json& value = field(object, name);
  if (!value.is_boolean()) throw ParseError("field " + std::string(name) + " must be a boolean");
  return value.get<bool>();
}

std::int64_t int_field(const json& object, std::string_view name) {
  const json& value = field(object, name);
  if (!value.is_number_integer()) {
    throw ParseError("field " + std::string(name) + " must be an integer");
  }
  return value.get<std::int64_t>();
}

std::vector<std::string> string_list(const json& object, std::string_view name) {
  const json& value = field(object, name);
  if (!value.is_array()) throw ParseError("field " + std::string(name) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw ParseError("field " + std::string(name) + " must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::optional<CrawlRecord> parse_line(std::string_view line, std::string& reason) {
  try {
    json object = json::parse(line);
    return record_from_json(object);
  } catch (const json::exception& e) {
    reason = std::string("malformed JSON: ") + e.what();
  } catch (const Error& e) {
    reason = e.what();
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(DialogKind kind) {
  switch (kind) {
    case DialogKind::alert: return "alert";
    case DialogKind::confirm: return "confirm";
    case DialogKind::prompt: return "prompt";
  }
  return "alert";
}

DialogKind parse_dialog_kind(std::string_view text) {
  if (text == "alert") return DialogKind::alert;
  if (text == "confirm") return DialogKind::confirm;
  if (text == "prompt") return DialogKind::prompt;
  throw ParseError("unknown dialog kind: " + std::string(text));
}

void validate(const CrawlRecord& record) {
  if (record.record_id.empty()) throw ParseError("record_id is empty");
  parse_url(record.seed_url);
  parse_url(record.final_url);
  for (const auto& hop : record.redirect_chain) parse_url(hop);
  if (!record.redirect_chain.empty() && record.redirect_chain.back() != record.final_url) {
    throw ParseError("final_url differs from the last redirect_chain entry");
  }
  if (record.popup_window_count < 0) throw ParseError("popup_window_count is negative");
  int previous = 0;
  for (const auto& dialog : record.dialogs) {
    if (dialog.ordinal <= previous) throw ParseError("dialog ordinals must be strictly increasing from 1");
    previous = dialog.ordinal;
    if (!is_valid_utf8(dialog.message)) throw ParseError("dialog message is not valid UTF-8");
  }
  if (!is_valid_utf8(record.html)) throw ParseError("html is not valid UTF-8");
  for (const auto& script : record.scripts) {
    if (!is_valid_utf8(script)) throw ParseError("script is not valid UTF-8");
  }
}

CrawlRecord record_from_json(const json& object) {
  if (!object.is_object()) throw ParseError("record must be a JSON object");
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (auto name : kFields) known = known || key == name;
    if (!known) throw ParseError("unknown field " + key);
  }
  CrawlRecord record;
  record.record_id = string_field(object, "record_id");
  record.seed_url = string_field(object, "seed_url");
  record.final_url = string_field(object, "final_url");
  record.vantage = string_field(object, "vantage");
  record.observed_at = parse_timestamp(string_field(object, "observed_at"));
  std::int64_t status = int_field(object, "http_status");
  if (status < 0 || status > 999) throw ParseError("http_status out of range");
  record.http_status = static_cast<int>(status);
  record.redirect_chain = string_list(object, "redirect_chain");
  record.html = string_field(object, "html");
  record.scripts = string_list(object, "scripts");
  const json& dialogs = field(object, "dialogs");
  if (!dialogs.is_array()) throw ParseError("field dialogs must be an array");
  for (const auto& item : dialogs) {
    if (!item.is_object()) throw ParseError("dialog entries must be objects");
    DialogEvent event;
    event.kind = parse_dialog_kind(string_field(item, "kind"));
    event.message = string_field(item, "message");
    std::int64_t ordinal = int_field(item, "ordinal");
    if (ordinal < 1 || ordinal > INT32_MAX) throw ParseError("dialog ordinal out of range");
    event.ordinal = static_cast<int>(ordinal);
    record.dialogs.push_back(std::move(event));
  }
  record.onunload_hooked = bool_field(object, "onunload_hooked");
  record.audio_autoplay = bool_field(object, "audio_autoplay");
  record.popup_window_count = int_field(object, "popup_window_count");
  validate(record);
  return record;
}

json to_json(const CrawlRecord& record) {
  json dialogs = json::array();
  for (const auto& d : record.dialogs) {
    dialogs.push_back({{"kind", to_string(d.kind)}, {"message", d.message}, {"ordinal", d.ordinal}});
  }
  return json{{"record_id", record.record_id},
              {"seed_url", record.seed_url},
              {"final_url", record.final_url},
              {"vantage", record.vantage},
              {"observed_at", format_timestamp(record.observed_at)},
              {"http_status", record.http_status},
              {"redirect_chain", record.redirect_chain},
              {"html", record.html},
              {"scripts", record.scripts},
              {"dialogs", std::move(dialogs)},
              {"onunload_hooked", record.onunload_hooked},
              {"audio_autoplay", record.audio_autoplay},
              {"popup_window_count", record.popup_window_count}};
}

std::string serialize_record(const CrawlRecord& record) { return to_json(record).dump(); }

IngestResult ingest_crawl_records(std::string_view content, std::size_t parallelism) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line =
        content.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    lines.emplace_back(line_no, line);
  }

  struct Parsed {
    std::optional<CrawlRecord> record;
    std::string reason;
  };
  auto parsed = parallel_map(lines.size(), parallelism, [&](std::size_t i) {
    Parsed p;
    p.record = parse_line(lines[i].second, p.reason);
    return p;
  });

  IngestResult result;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (parsed[i].record) {
      result.records.push_back(std::move(*parsed[i].record));
    } else {
      result.errors.push_back({lines[i].first, std::move(parsed[i].reason)});
    }
  }
  return result;
}

IngestResult ingest_crawl_records(std::istream& source, std::size_t parallelism) {
  std::ostringstream buffer;
  if (!source.good() && !source.eof()) throw Error("crawl-record source is unreadable");
  buffer << source.rdbuf();
  if (source.bad()) throw Error("crawl-record source is unreadable");
  return ingest_crawl_records(buffer.str(), parallelism);
}

}  // namespace scamwatch::corpus
