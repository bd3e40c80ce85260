#pragma once

#include <span>

#include <json.hpp>

namespace scamwatch::evaluation {

double mean(std::span<const double> values);

// Unbiased (n - 1) variance. Throws InvalidArgument for fewer than 2 values.
double sample_variance(std::span<const double> values);
double sample_stddev(std::span<const double> values);

struct TTestResult {
  double t_statistic = 0.0;
  double degrees_of_freedom = 0.0;  // Welch-Satterthwaite
  double p_value = 1.0;             // two-sided
};

// Two-sided p-value of Student's t distribution, via the regularised
// incomplete beta function. Results that would underflow are clamped to the
// smallest normal double so the value stays in (0, 1].
double students_t_two_sided_p(double t, double degrees_of_freedom);

// Welch's unequal-variance t-test of mean(a) - mean(b). Throws
// InvalidArgument when a sample has fewer than 2 values or both have zero
// variance.
TTestResult welch_t_test(std::span<const double> sample_a, std::span<const double> sample_b);

nlohmann::json to_json(const TTestResult& result);

}  // namespace scamwatch::evaluation
