// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace fsorf::mc {

/// One-sample Kolmogorov-Smirnov statistic of `samples` against `cdf` (samples are sorted in place).
inline double ks_statistic(std::vector<double>& samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

/// Asymptotic critical value of the KS statistic at the 1% level.
inline double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

/// CDF tabulated on a logarithmic grid over [lo, hi] and interpolated linearly in log γ.
/// Keeps KS tests over 10^6 samples cheap when each exact CDF value costs a contour integral.
class TabulatedCdf {
public:
    TabulatedCdf(const std::function<double(double)>& cdf, double lo, double hi, std::size_t points = 4001)
        : log_lo_(std::log(lo)), step_((std::log(hi) - std::log(lo)) / static_cast<double>(points - 1)) {
        values_.reserve(points);
        for (std::size_t i = 0; i < points; ++i) values_.push_back(cdf(std::exp(log_lo_ + step_ * i)));
    }

    double operator()(double x) const {
        if (x <= 0.0) return 0.0;
        const double t = (std::log(x) - log_lo_) / step_;
        if (t <= 0.0) return values_.front();
        if (t >= static_cast<double>(values_.size() - 1)) return values_.back();
        const auto i = static_cast<std::size_t>(t);
        const double w = t - static_cast<double>(i);
        return (1.0 - w) * values_[i] + w * values_[i + 1];
    }

private:
    double log_lo_, step_;
    std::vector<double> values_;
};

}  // namespace fsorf::mc
