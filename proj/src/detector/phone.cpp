#include "scamwatch/detector/phone.hpp"

#include <cctype>
#include <optional>
#include <unordered_set>

#include "scamwatch/common/error.hpp"

namespace scamwatch::detector {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_separator(char c) { return c == ' ' || c == '.' || c == '-'; }

// Parses the national part (area code onwards) at `pos`. On success returns
// the end offset and appends 10 digits to `digits`.
std::optional<std::size_t> parse_national(std::string_view text, std::size_t pos, std::string& digits) {
  auto take_digits = [&](std::size_t count, bool leading_2_to_9) -> bool {
    if (pos + count > text.size()) return false;
    for (std::size_t i = 0; i < count; ++i) {
      if (!is_digit(text[pos + i])) return false;
    }
    if (leading_2_to_9 && text[pos] < '2') return false;
    digits.append(text.substr(pos, count));
    pos += count;
    return true;
  };
  auto skip_separator = [&] {
    if (pos < text.size() && is_separator(text[pos])) ++pos;
  };

  bool paren = pos < text.size() && text[pos] == '(';
  if (paren) ++pos;
  if (!take_digits(3, true)) return std::nullopt;
  if (paren) {
    if (pos >= text.size() || text[pos] != ')') return std::nullopt;
    ++pos;
  }
  skip_separator();
  if (!take_digits(3, true)) return std::nullopt;
  skip_separator();
  if (!take_digits(4, false)) return std::nullopt;
  if (pos < text.size() && is_alnum(text[pos])) return std::nullopt;
  return pos;
}

std::optional<PhoneOccurrence> match_at(std::string_view text, std::size_t start) {
  std::string digits;
  // With a country code first, then without.
  std::size_t pos = start;
  if (text[pos] == '+' && pos + 1 < text.size() && text[pos + 1] == '1') {
    pos += 2;
  } else if (text[pos] == '1') {
    pos += 1;
  }
  if (pos != start) {
    if (pos < text.size() && is_separator(text[pos])) ++pos;
    if (auto end = parse_national(text, pos, digits)) return PhoneOccurrence{digits, start, *end};
    digits.clear();
  }
  if (text[start] == '+') return std::nullopt;
  if (auto end = parse_national(text, start, digits)) return PhoneOccurrence{digits, start, *end};
  return std::nullopt;
}

}  // namespace

std::string_view to_string(PhoneSource source) {
  switch (source) {
    case PhoneSource::dialog: return "dialog";
    case PhoneSource::body: return "body";
    case PhoneSource::script_default: return "script-default";
    case PhoneSource::script_dynamic: return "script-dynamic";
  }
  return "body";
}

PhoneSource parse_phone_source(std::string_view text) {
  if (text == "dialog") return PhoneSource::dialog;
  if (text == "body") return PhoneSource::body;
  if (text == "script-default") return PhoneSource::script_default;
  if (text == "script-dynamic") return PhoneSource::script_dynamic;
  throw ParseError("unknown phone source: " + std::string(text));
}

const std::set<std::string>& default_toll_free_prefixes() {
  static const std::set<std::string> prefixes = {"800", "833", "844", "855", "866", "877", "888"};
  return prefixes;
}

bool is_toll_free(std::string_view digits, const std::set<std::string>& prefixes) {
  return digits.size() == 10 && prefixes.count(std::string(digits.substr(0, 3))) > 0;
}

std::vector<PhoneOccurrence> find_phone_numbers(std::string_view text) {
  std::vector<PhoneOccurrence> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    bool can_start = c == '+' || c == '(' || is_digit(c);
    bool clean_left = i == 0 || !(is_alnum(text[i - 1]) || text[i - 1] == '+');
    if (can_start && clean_left) {
      if (auto m = match_at(text, i)) {
        i = m->end;
        out.push_back(std::move(*m));
        continue;
      }
    }
    ++i;
  }
  return out;
}

std::vector<PhoneNumber> extract_phone_numbers(std::string_view text, PhoneSource source,
                                               const std::set<std::string>& toll_free_prefixes) {
  std::vector<PhoneNumber> out;
  std::unordered_set<std::string> seen;
  for (auto& occurrence : find_phone_numbers(text)) {
    if (!seen.insert(occurrence.digits).second) continue;
    bool free = is_toll_free(occurrence.digits, toll_free_prefixes);
    out.push_back({std::move(occurrence.digits), free, source});
  }
  return out;
}

}  // namespace scamwatch::detector
