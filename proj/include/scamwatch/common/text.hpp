#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace scamwatch {

std::string ascii_lower(std::string_view text);
std::string_view trim(std::string_view text);

// Collapses every run of ASCII whitespace to one space and trims the ends.
std::string normalize_whitespace(std::string_view text);

bool is_valid_utf8(std::string_view text);

// Number of code points; invalid bytes count as one each.
std::size_t utf8_length(std::string_view text);

// Text a browser would render from `html`: tags removed, <script>, <style>
// and comments dropped, common entities decoded.
std::string visible_text(std::string_view html);

// Entries of a bundled list file: one per line, "//" comments and blank
// lines skipped, surrounding whitespace trimmed.
std::vector<std::string> list_entries(std::string_view content);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace scamwatch
