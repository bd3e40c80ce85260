#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace scamwatch {

// All times are UTC. Dates are calendar days; timestamps have second
// resolution.
using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;

// Accepts exactly "YYYY-MM-DDTHH:MM:SSZ".
Timestamp parse_timestamp(std::string_view text);
std::string format_timestamp(Timestamp ts);

// Accepts exactly "YYYY-MM-DD".
Date parse_date(std::string_view text);
std::string format_date(Date date);

inline Date to_date(Timestamp ts) { return std::chrono::floor<std::chrono::days>(ts); }

// Signed whole-day difference later - earlier.
inline long long days_between(Date earlier, Date later) {
  return (later - earlier).count();
}

}  // namespace scamwatch
