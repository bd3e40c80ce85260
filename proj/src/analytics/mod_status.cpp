#include "scamwatch/analytics/mod_status.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "scamwatch/common/error.hpp"
#include "scamwatch/common/text.hpp"
#include "scamwatch/corpus/public_suffix.hpp"

namespace scamwatch::analytics {
namespace {

using Row = std::vector<std::string>;
using Table = std::vector<Row>;

std::string cell_text(std::string_view raw) { return std::string(trim(normalize_whitespace(visible_text(raw)))); }

// Lenient table reader: unclosed <td>/<tr> elements are closed by the next
// sibling, as browsers do.
std::vector<Table> read_tables(std::string_view html) {
  std::vector<Table> tables;
  std::vector<Table> open;  // nested tables
  std::size_t cell_start = std::string_view::npos;

  auto close_cell = [&](std::size_t end) {
    if (cell_start == std::string_view::npos || open.empty()) return;
    if (open.back().empty()) open.back().emplace_back();
    open.back().back().push_back(cell_text(html.substr(cell_start, end - cell_start)));
    cell_start = std::string_view::npos;
  };

  std::size_t i = 0;
  while ((i = html.find('<', i)) != std::string_view::npos) {
    std::size_t close = html.find('>', i);
    if (close == std::string_view::npos) break;
    std::size_t name_begin = i + 1;
    bool closing = name_begin < close && html[name_begin] == '/';
    if (closing) ++name_begin;
    std::size_t name_end = name_begin;
    while (name_end < close && std::isalnum(static_cast<unsigned char>(html[name_end]))) ++name_end;
    std::string name = ascii_lower(html.substr(name_begin, name_end - name_begin));

    if (name == "table") {
      close_cell(i);
      if (!closing) {
        open.emplace_back();
      } else if (!open.empty()) {
        tables.push_back(std::move(open.back()));
        open.pop_back();
      }
    } else if (name == "tr" && !open.empty()) {
      close_cell(i);
      if (!closing) open.back().emplace_back();
    } else if ((name == "td" || name == "th") && !open.empty()) {
      close_cell(i);
      if (!closing) cell_start = close + 1;
    }
    i = close + 1;
  }
  close_cell(html.size());
  while (!open.empty()) {
    tables.push_back(std::move(open.back()));
    open.pop_back();
  }
  return tables;
}

std::optional<std::int64_t> scrape_int(const std::string& text, const std::regex& pattern) {
  std::smatch m;
  if (!std::regex_search(text, m, pattern)) return std::nullopt;
  try {
    return std::stoll(m[1].str());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<std::int64_t> scrape_uptime(const std::string& text) {
  static const std::regex seconds_form(R"((?:serveruptimeseconds|^uptime):\s*(\d+))",
                                       std::regex::icase | std::regex::multiline);
  if (auto seconds = scrape_int(text, seconds_form)) return seconds;
  static const std::regex words_form(R"(server uptime:\s*((?:\d+\s+(?:day|hour|minute|second)s?\s*)+))",
                                     std::regex::icase);
  std::smatch m;
  if (!std::regex_search(text, m, words_form)) return std::nullopt;
  static const std::regex part(R"((\d+)\s+(day|hour|minute|second))", std::regex::icase);
  std::int64_t total = 0;
  std::string span = m[1].str();
  for (std::sregex_iterator it(span.begin(), span.end(), part), end; it != end; ++it) {
    std::int64_t n = std::stoll((*it)[1].str());
    std::string unit = ascii_lower((*it)[2].str());
    total += n * (unit == "day" ? 86400 : unit == "hour" ? 3600 : unit == "minute" ? 60 : 1);
  }
  return total;
}

bool looks_like_auto_variant(std::string_view text) {
  if (text.find('<') != std::string_view::npos) return false;
  static const std::regex keys(R"(^(Total Accesses|ServerUptimeSeconds|Uptime|BusyWorkers|IdleWorkers):)",
                               std::regex::multiline);
  std::string owned(text);
  return std::regex_search(owned, keys);
}

}  // namespace

ModStatusSample parse_mod_status(std::string_view html) {
  ModStatusSample sample;
  bool found_table = false;
  for (const auto& table : read_tables(html)) {
    std::optional<std::size_t> client_column;
    for (const auto& row : table) {
      if (!client_column) {
        auto client = std::find(row.begin(), row.end(), "Client");
        bool has_request = std::find(row.begin(), row.end(), "Request") != row.end();
        if (client != row.end() && has_request) client_column = static_cast<std::size_t>(client - row.begin());
        continue;
      }
      if (*client_column < row.size() && corpus::is_ip_literal(row[*client_column])) {
        sample.client_ips.push_back(row[*client_column]);
      }
    }
    if (client_column) {
      found_table = true;
      break;
    }
  }

  bool plain = !found_table && looks_like_auto_variant(html);
  if (!found_table && !plain) throw ParseError("not a server-status page");

  std::string text = plain ? std::string(html) : visible_text(html);
  static const std::regex accesses(R"(total accesses:\s*(\d+))", std::regex::icase);
  sample.total_accesses = scrape_int(text, accesses);
  sample.uptime_seconds = scrape_uptime(text);
  return sample;
}

ModStatusSample load_mod_status_file(const std::filesystem::path& file) {
  ModStatusSample sample = parse_mod_status(read_file(file));
  sample.domain = ascii_lower(file.parent_path().filename().string());
  if (sample.domain.empty()) throw ParseError("cannot infer domain from " + file.string());
  std::string stem = file.stem().string();
  bool numeric = !stem.empty() && std::all_of(stem.begin(), stem.end(), [](char c) { return c >= '0' && c <= '9'; });
  sample.sampled_at = numeric ? Timestamp{std::chrono::seconds{std::stoll(stem)}} : parse_timestamp(stem);
  return sample;
}

ModStatusLoad load_mod_status_tree(const std::filesystem::path& root) {
  ModStatusLoad load;
  std::vector<std::filesystem::path> files;
  for (const auto& domain_dir : std::filesystem::directory_iterator(root)) {
    if (!domain_dir.is_directory()) continue;
    for (const auto& entry : std::filesystem::directory_iterator(domain_dir.path())) {
      if (entry.is_regular_file() && entry.path().extension() == ".html") files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    try {
      load.samples.push_back(load_mod_status_file(file));
    } catch (const Error& e) {
      load.errors.push_back(std::filesystem::relative(file, root).string() + ": " + e.what());
    }
  }
  std::sort(load.samples.begin(), load.samples.end(), [](const ModStatusSample& a, const ModStatusSample& b) {
    return std::tie(a.domain, a.sampled_at) < std::tie(b.domain, b.sampled_at);
  });
  return load;
}

}  // namespace scamwatch::analytics
