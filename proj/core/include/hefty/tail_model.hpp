#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hefty {

/// Parameters of the three-piece response distribution: a point mass at zero
/// (non-converting units), a truncated exponential torso on (0, C) and a
/// type-I Pareto tail on [C, inf).
struct MixtureParams {
    double p_nonconv = 0.0; ///< probability mass at zero
    double p_torso = 0.0;   ///< probability of the torso segment
    double p_tail = 0.0;    ///< probability of the tail segment
    double lambda = 1.0;    ///< truncated-exponential rate (1 / currency unit)
    double cutoff_c = 1.0;  ///< torso/tail boundary (currency units)
    double alpha = 2.0;     ///< Pareto shape

    /// Throws InvalidInput if the segment probabilities do not form a
    /// distribution (within 1e-12) or any of lambda, cutoff_c, alpha is
    /// non-positive.
    void validate() const;
};

void to_json(nlohmann::json& j, const MixtureParams& p);
void from_json(const nlohmann::json& j, MixtureParams& p);

/// Mean of the truncated exponential on (0, C) with rate lambda:
/// 1/lambda - C/(e^{lambda C} - 1). Series expansion near lambda*C = 0.
double truncated_exp_mean(double lambda, double cutoff_c);

/// Maximum-likelihood fit with a user-chosen cutoff. Segment probabilities
/// are the empirical fractions (zeros / below cutoff / at-or-above cutoff),
/// alpha is the Hill estimator over the tail segment and lambda solves the
/// truncated-exponential stationarity condition by bisection.
MixtureParams fit_mixture(std::span<const double> sample, double cutoff_c);

/// E[Y] per the mixture: p_torso*(1/l - C/(e^{lC}-1)) + p_tail*alpha*C/(alpha-1).
/// Throws RangeError when alpha <= 1 (infinite mean).
double mixture_mean(const MixtureParams& params);

/// i.i.d. draws via inverse-CDF sampling; bit-identical for a fixed seed.
std::vector<double> sample_mixture(const MixtureParams& params, std::size_t n,
                                   std::uint64_t seed);

/// Returns params with lambda re-solved so that the mixture mean equals
/// (1 + target_lift) times the current mean. Tail shape and segment
/// probabilities are untouched, so Hill diagnostics stay comparable across
/// arms. Throws RangeError when the target mean is not attainable by the
/// torso rate alone (the message reports the attainable interval).
MixtureParams inject_lift(const MixtureParams& params, double target_lift);

/// Piecewise inverse CDF; q must lie in (0, 1).
double mixture_quantile(const MixtureParams& params, double q);

/// Largest absolute gap between empirical and model quantiles over a
/// 99-point grid, evaluated per segment. Used to judge a cutoff choice.
struct QqDeviation {
    double torso_max_gap = 0.0;
    double tail_max_gap = 0.0;
    std::size_t n_zero = 0;
    std::size_t n_torso = 0;
    std::size_t n_tail = 0;
};

QqDeviation segment_qq_deviation(std::span<const double> sample,
                                 const MixtureParams& params);

} // namespace hefty
