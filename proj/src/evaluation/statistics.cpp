#include "scamwatch/evaluation/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/special_functions/beta.hpp>

#include "scamwatch/common/error.hpp"

namespace scamwatch::evaluation {

double mean(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("mean of an empty sample");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
  if (values.size() < 2) throw InvalidArgument("variance needs at least 2 values");
  const double m = mean(values);
  double sum = 0.0;
  for (double v : values) sum += (v - m) * (v - m);
  return sum / static_cast<double>(values.size() - 1);
}

double sample_stddev(std::span<const double> values) { return std::sqrt(sample_variance(values)); }

double students_t_two_sided_p(double t, double degrees_of_freedom) {
  if (!(degrees_of_freedom > 0.0)) throw InvalidArgument("degrees of freedom must be positive");
  if (std::isnan(t)) throw InvalidArgument("t statistic is NaN");
  if (std::isinf(t)) return std::numeric_limits<double>::min();
  // P(|T| >= |t|) = I_{df/(df+t^2)}(df/2, 1/2)
  const double x = degrees_of_freedom / (degrees_of_freedom + t * t);
  double p = boost::math::ibeta(degrees_of_freedom / 2.0, 0.5, x);
  return std::clamp(p, std::numeric_limits<double>::min(), 1.0);
}

TTestResult welch_t_test(std::span<const double> sample_a, std::span<const double> sample_b) {
  if (sample_a.size() < 2 || sample_b.size() < 2) {
    throw InvalidArgument("welch_t_test needs at least 2 values per sample");
  }
  const double na = static_cast<double>(sample_a.size());
  const double nb = static_cast<double>(sample_b.size());
  const double va = sample_variance(sample_a) / na;
  const double vb = sample_variance(sample_b) / nb;
  if (va == 0.0 && vb == 0.0) throw InvalidArgument("welch_t_test needs non-zero variance in a sample");

  TTestResult result;
  result.t_statistic = (mean(sample_a) - mean(sample_b)) / std::sqrt(va + vb);
  result.degrees_of_freedom = (va + vb) * (va + vb) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  result.p_value = students_t_two_sided_p(result.t_statistic, result.degrees_of_freedom);
  return result;
}

nlohmann::json to_json(const TTestResult& result) {
  return {{"t_statistic", result.t_statistic},
          {"degrees_of_freedom", result.degrees_of_freedom},
          {"p_value", result.p_value},
          {"alternative", "two-sided"}};
}

}  // namespace scamwatch::evaluation
