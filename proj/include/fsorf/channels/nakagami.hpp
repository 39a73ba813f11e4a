// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "fsorf/error.hpp"

namespace fsorf::channels {

/// Nakagami-m RF link; the SNR is Gamma(m, γ̄/m).
struct NakagamiLink {
    int m = 2;
    double avg_snr = 1.0;

    void validate() const {
        require(m >= 1, "NakagamiLink: m must be a positive integer");
        require(avg_snr > 0.0, "NakagamiLink: average SNR must be positive");
    }
};

inline double nakagami_snr_pdf(const NakagamiLink& link, double gamma) {
    link.validate();
    require(gamma >= 0.0, "nakagami_snr_pdf: gamma must be non-negative");
    const double rate = link.m / link.avg_snr;
    if (gamma == 0.0) return link.m == 1 ? rate : 0.0;
    return std::exp(link.m * std::log(rate) + (link.m - 1) * std::log(gamma) - std::lgamma(link.m) - rate * gamma);
}

/// e^{-x} Σ_{k<m} x^k/k! with x = mγ/γ̄.
inline double nakagami_snr_ccdf(const NakagamiLink& link, double gamma) {
    link.validate();
    require(gamma >= 0.0, "nakagami_snr_ccdf: gamma must be non-negative");
    if (std::isinf(gamma)) return 0.0;
    const double x = link.m * gamma / link.avg_snr;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < link.m; ++k) {
        term *= x / k;
        sum += term;
    }
    return std::exp(-x) * sum;
}

inline double nakagami_snr_cdf(const NakagamiLink& link, double gamma) {
    link.validate();
    require(gamma >= 0.0, "nakagami_snr_cdf: gamma must be non-negative");
    if (gamma == 0.0) return 0.0;
    const double x = link.m * gamma / link.avg_snr;
    // Small arguments: the regularized lower incomplete gamma avoids cancellation.
    if (x < 0.5) {
        double term = std::exp(link.m * std::log(x) - x - std::lgamma(link.m + 1)), sum = term;
        for (int k = 1; term > 1e-18 * sum; ++k) {
            term *= x / (link.m + k);
            sum += term;
        }
        return sum;
    }
    return 1.0 - nakagami_snr_ccdf(link, gamma);
}

}  // namespace fsorf::channels
