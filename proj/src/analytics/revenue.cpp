#include "scamwatch/analytics/revenue.hpp"

#include <cmath>
#include <limits>

#include "scamwatch/common/error.hpp"
#include "scamwatch/evaluation/statistics.hpp"

namespace scamwatch::analytics {
namespace {

constexpr std::int64_t kRateScale = 1'000'000'000;

}  // namespace

Money Money::from_dollars(double dollars) {
  if (!std::isfinite(dollars) || std::fabs(dollars) > 9e15) throw InvalidArgument("amount out of range");
  return Money{std::llround(dollars * 100.0)};
}

std::string Money::format() const {
  std::string digits = std::to_string(cents < 0 ? -cents : cents);
  while (digits.size() < 3) digits.insert(digits.begin(), '0');
  std::string whole = digits.substr(0, digits.size() - 2);
  std::string grouped;
  for (std::size_t i = 0; i < whole.size(); ++i) {
    if (i > 0 && (whole.size() - i) % 3 == 0) grouped += ',';
    grouped += whole[i];
  }
  return (cents < 0 ? "-$" : "$") + grouped + "." + digits.substr(digits.size() - 2);
}

RevenueEstimate estimate_revenue(std::int64_t unique_visitors, double conversion_rate, double avg_price) {
  if (unique_visitors < 0) throw InvalidArgument("negative visitor count");
  if (!(conversion_rate >= 0.0 && conversion_rate <= 1.0)) throw InvalidArgument("conversion rate outside [0, 1]");
  if (!(avg_price >= 0.0)) throw InvalidArgument("negative average price");

  RevenueEstimate est;
  est.unique_visitors = unique_visitors;
  est.conversion_rate = conversion_rate;
  est.avg_price = Money::from_dollars(avg_price);

  __int128 rate = std::llround(conversion_rate * static_cast<double>(kRateScale));
  est.victims = static_cast<std::int64_t>(static_cast<__int128>(unique_visitors) * rate / kRateScale);
  __int128 revenue = static_cast<__int128>(est.victims) * est.avg_price.cents;
  if (revenue > std::numeric_limits<std::int64_t>::max()) throw InvalidArgument("revenue overflows");
  est.revenue = Money{static_cast<std::int64_t>(revenue)};
  return est;
}

double triage_threshold(std::span<const double> durations_minutes) {
  if (durations_minutes.size() < 2) throw InvalidArgument("triage threshold needs at least 2 durations");
  return evaluation::mean(durations_minutes) + 3.0 * evaluation::sample_stddev(durations_minutes);
}

nlohmann::json to_json(const RevenueEstimate& estimate) {
  return {{"unique_visitors", estimate.unique_visitors},
          {"conversion_rate", estimate.conversion_rate},
          {"avg_price_cents", estimate.avg_price.cents},
          {"victims", estimate.victims},
          {"revenue_cents", estimate.revenue.cents},
          {"revenue", estimate.revenue.format()}};
}

}  // namespace scamwatch::analytics
