#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <json.hpp>

namespace scamwatch::analytics {

// Whole cents.
struct Money {
  std::int64_t cents = 0;

  static Money from_dollars(double dollars);  // rounded to the nearest cent
  double dollars() const { return static_cast<double>(cents) / 100.0; }
  std::string format() const;  // "$9,792,720.00"

  auto operator<=>(const Money&) const = default;
};

struct RevenueEstimate {
  std::int64_t unique_visitors = 0;
  double conversion_rate = 0.0;
  Money avg_price;
  std::int64_t victims = 0;
  Money revenue;
};

// victims = floor(unique_visitors * conversion_rate), revenue = victims *
// avg_price. The rate is taken at a resolution of 1e-9 and everything after
// that is integer arithmetic. Throws InvalidArgument for negative inputs, a
// rate above 1, or a result that overflows.
RevenueEstimate estimate_revenue(std::int64_t unique_visitors, double conversion_rate, double avg_price);

// Call-duration cutoff: mean + 3 * sample standard deviation (n - 1).
// Throws InvalidArgument for fewer than 2 durations.
double triage_threshold(std::span<const double> durations_minutes);

nlohmann::json to_json(const RevenueEstimate& estimate);

}  // namespace scamwatch::analytics
