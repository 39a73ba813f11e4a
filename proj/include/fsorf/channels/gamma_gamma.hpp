// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "fsorf/channels/optical.hpp"
#include "fsorf/error.hpp"

namespace fsorf::channels {

/// Gamma-Gamma optical link with pointing errors (the Málaga ρ = 1, g = 0 limit).
struct GammaGammaLink {
    double alpha = 4.2;
    double beta = 3.0;
    double xi = 1.1;
    Detection detection = Detection::heterodyne;
    double avg_snr = 1.0;

    void validate() const {
        require(alpha > 0.0 && beta > 0.0, "GammaGammaLink: alpha and beta must be positive");
        require(xi > 0.0, "GammaGammaLink: xi must be positive");
        require(avg_snr > 0.0, "GammaGammaLink: average SNR must be positive");
    }
};

struct GammaGammaDerived {
    double A = 0.0;  // ξ² / (r Γ(α) Γ(β))
    double h = 0.0;  // ξ² / (ξ² + 1)
    double B = 0.0;  // h α β
    double E = 0.0;
    double mu = 0.0;
    std::vector<double> K1, K2;
    OpticalSnrModel model;
};

inline GammaGammaDerived gamma_gamma_link(const GammaGammaLink& link) {
    link.validate();
    GammaGammaDerived d;
    const int r = detection_order(link.detection);
    const double x2 = link.xi * link.xi, a = link.alpha, b = link.beta;
    d.A = x2 / (r * std::tgamma(a) * std::tgamma(b));
    d.h = x2 / (x2 + 1.0);
    d.B = d.h * a * b;
    d.E = std::pow(d.B, r) / std::pow(static_cast<double>(r), 2 * r);
    if (link.detection == Detection::heterodyne) {
        d.mu = link.avg_snr;
    } else {
        d.mu = x2 * (2.0 + x2) / ((1.0 + x2) * (1.0 + x2)) / ((1.0 + a) / a * (1.0 + 1.0 / b)) * link.avg_snr;
    }
    d.model = {r, x2, a, d.B, d.mu, {{b, d.A}}, d.A};
    d.K1 = d.model.K1();
    d.K2 = d.model.K2(b);
    return d;
}

inline GammaGammaLink gamma_gamma_link(double alpha, double beta, double xi, Detection detection, double avg_snr) {
    return {alpha, beta, xi, detection, avg_snr};
}

}  // namespace fsorf::channels
