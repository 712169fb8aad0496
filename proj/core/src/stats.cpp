#include "hefty/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/beta.hpp>

#include "hefty/errors.hpp"

namespace hefty {

double mean(std::span<const double> values) {
    if (values.empty()) throw InvalidInput("mean: empty input");
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw InvalidInput("sample_variance: need at least 2 values");
    const double m = mean(values);
    double acc = 0.0;
    for (double v : values) acc += (v - m) * (v - m);
    return acc / static_cast<double>(n - 1);
}

double sample_sd(std::span<const double> values) {
    return std::sqrt(sample_variance(values));
}

double median(std::vector<double> values) {
    if (values.empty()) throw InvalidInput("median: empty input");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double median_abs_deviation(std::span<const double> values) {
    const double m = median(std::vector<double>(values.begin(), values.end()));
    std::vector<double> dev(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) dev[i] = std::abs(values[i] - m);
    return median(std::move(dev));
}

double percentile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw InvalidInput("percentile: empty input");
    if (q < 0.0 || q > 1.0) throw InvalidInput("percentile: q outside [0, 1]");
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = q * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double percentile(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    return percentile_sorted(values, q);
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double two_sided_p(double z) {
    return std::erfc(std::abs(z) / std::sqrt(2.0));
}

double binomial_upper_p(long successes, long trials, double p0) {
    if (trials < 1 || successes < 0 || successes > trials)
        throw InvalidInput("binomial_upper_p: invalid counts");
    if (successes == 0) return 1.0;
    // P(X >= k) = I_p(k, n - k + 1)
    return boost::math::ibeta(static_cast<double>(successes),
                              static_cast<double>(trials - successes + 1), p0);
}

} // namespace hefty
