#include "scamwatch/common/csv.hpp"

#include <boost/tokenizer.hpp>

#include "scamwatch/common/text.hpp"

namespace scamwatch {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::string owned(line);
  if (!owned.empty() && owned.back() == '\r') owned.pop_back();
  using Separator = boost::escaped_list_separator<char>;
  boost::tokenizer<Separator> tokens(owned, Separator('\\', ',', '"'));
  std::vector<std::string> out;
  for (const auto& token : tokens) out.emplace_back(trim(token));
  return out;
}

CsvTable parse_csv(std::string_view content, bool has_header) {
  CsvTable table;
  bool header_pending = has_header;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line =
        content.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() : nl + 1;
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (header_pending) {
      table.header = std::move(fields);
      header_pending = false;
      continue;
    }
    table.rows.push_back({line_no, std::move(fields)});
  }
  return table;
}

}  // namespace scamwatch
