#pragma once

#include <span>
#include <utility>
#include <vector>

namespace hefty {

double mean(std::span<const double> values);

/// Unbiased (n-1) sample variance. Requires at least 2 values.
double sample_variance(std::span<const double> values);
double sample_sd(std::span<const double> values);

double median(std::vector<double> values);

/// Median absolute deviation from the median (unscaled).
double median_abs_deviation(std::span<const double> values);

/// Type-7 empirical percentile (linear interpolation between order
/// statistics), the common default across numeric environments.
/// `sorted` must be ascending and non-empty; q in [0, 1].
double percentile_sorted(std::span<const double> sorted, double q);

/// Convenience overload that sorts a copy.
double percentile(std::vector<double> values, double q);

/// Standard normal CDF.
double normal_cdf(double z);

/// Two-sided p-value 2*(1 - Phi(|z|)).
double two_sided_p(double z);

/// One-sided exact binomial tail P(X >= successes | trials, p0).
double binomial_upper_p(long successes, long trials, double p0);

} // namespace hefty
