#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scamwatch {

// Splits one comma-separated line; double-quoted fields may contain commas.
std::vector<std::string> split_csv_line(std::string_view line);

struct CsvRow {
  std::size_t line = 0;  // 1-based line number in the source
  std::vector<std::string> fields;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

// Parses `content`, treating the first non-blank line as the header when
// `has_header` is set. Blank lines are skipped. Field whitespace is trimmed.
CsvTable parse_csv(std::string_view content, bool has_header = true);

}  // namespace scamwatch
