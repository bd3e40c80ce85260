#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scamwatch::detector {

enum class PhoneSource { dialog, body, script_default, script_dynamic };

std::string_view to_string(PhoneSource source);
PhoneSource parse_phone_source(std::string_view text);

// NANP number normalised to its 10 national digits.
struct PhoneNumber {
  std::string digits;
  bool toll_free = false;
  PhoneSource source = PhoneSource::body;

  bool operator==(const PhoneNumber&) const = default;
};

const std::set<std::string>& default_toll_free_prefixes();

bool is_toll_free(std::string_view digits, const std::set<std::string>& prefixes = default_toll_free_prefixes());

// One occurrence of a number in a text, with its byte span.
struct PhoneOccurrence {
  std::string digits;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Every NANP-formatted number in `text`, in order, duplicates included.
// Accepted shapes: an optional "+1" or "1" country code, a 3-digit area code
// optionally in parentheses, then 3 + 4 digits, each group separated by at
// most one space, dot or dash. Area code and exchange start with 2-9. A
// match must not touch other letters or digits on either side.
std::vector<PhoneOccurrence> find_phone_numbers(std::string_view text);

// Distinct numbers in first-occurrence order.
std::vector<PhoneNumber> extract_phone_numbers(std::string_view text, PhoneSource source = PhoneSource::body,
                                               const std::set<std::string>& toll_free_prefixes =
                                                   default_toll_free_prefixes());

}  // namespace scamwatch::detector
