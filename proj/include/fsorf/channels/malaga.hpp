// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "fsorf/channels/optical.hpp"
#include "fsorf/error.hpp"

namespace fsorf::channels {

/// Málaga-faded optical link with pointing errors.
struct MalagaLink {
    double alpha = 2.296;
    int beta = 2;
    double rho = 0.95;
    double b0 = 0.25;
    double omega = 0.5;
    double phase_diff = 1.5707963267948966;
    double xi = 1.1;
    Detection detection = Detection::heterodyne;
    double avg_snr = 1.0;

    double g() const { return 2.0 * b0 * (1.0 - rho); }
    double omega_prime() const {
        return omega + 2.0 * b0 * rho + 2.0 * std::sqrt(2.0 * b0 * rho * omega) * std::cos(phase_diff);
    }

    void validate() const {
        require(alpha > 0.0, "MalagaLink: alpha must be positive");
        require(beta >= 1, "MalagaLink: beta must be a positive integer");
        require(rho >= 0.0 && rho <= 1.0, "MalagaLink: rho must lie in [0, 1]");
        require(b0 > 0.0, "MalagaLink: b0 must be positive");
        require(omega >= 0.0, "MalagaLink: omega must be non-negative");
        require(xi > 0.0, "MalagaLink: xi must be positive");
        require(avg_snr > 0.0, "MalagaLink: average SNR must be positive");
    }
};

/// Derived constants of a Málaga link.
struct MalagaDerived {
    double A = 0.0;
    double B = 0.0;
    double E = 0.0;
    double g = 0.0;
    double omega_prime = 0.0;
    std::vector<double> a_m, b_m, c_m;
    double mu = 0.0;
    std::vector<double> K1;
    /// K2 for each mixture index m = 1..β.
    std::vector<std::vector<double>> K2;
    OpticalSnrModel model;
};

/// μ_r of the detection scheme. μ_1 = γ̄; μ_2 keeps the published (g + Ω') factor.
inline double malaga_mu(const MalagaLink& link) {
    if (link.detection == Detection::heterodyne) return link.avg_snr;
    const double g = link.g(), op = link.omega_prime(), x2 = link.xi * link.xi, a = link.alpha;
    const double num = x2 * (2.0 + x2) * (g + op) / ((1.0 + x2) * (1.0 + x2));
    const double den = (1.0 + a) / a * (2.0 * g * (g + 2.0 * op) + op * op * (1.0 + 1.0 / link.beta));
    return num / den * link.avg_snr;
}

inline MalagaDerived derive_malaga(const MalagaLink& link) {
    link.validate();
    MalagaDerived d;
    d.g = link.g();
    d.omega_prime = link.omega_prime();
    if (!(d.g > 0.0))
        throw std::invalid_argument("derive_malaga: g = 0 is the Gamma-Gamma limit; use gamma_gamma_link");
    const double a = link.alpha, g = d.g, op = d.omega_prime;
    const int beta = link.beta;
    const int r = detection_order(link.detection);
    const double x2 = link.xi * link.xi;
    const double gbo = g * beta + op;

    // A without the 1/r factor, so that Eq. (1) integrates to one for both detection schemes.
    const double log_A = std::log(2.0) + 0.5 * a * std::log(a) - (1.0 + 0.5 * a) * std::log(g) - std::lgamma(a) +
                         (beta + 0.5 * a) * std::log(g * beta / gbo);
    d.A = std::exp(log_A);
    d.B = x2 * a * beta * (g + op) / ((x2 + 1.0) * gbo);
    d.E = std::pow(d.B, r) / std::pow(static_cast<double>(r), 2 * r);
    d.mu = malaga_mu(link);
    d.K1 = delta(r, x2 + 1.0);

    d.model.r = r;
    d.model.xi2 = x2;
    d.model.alpha = a;
    d.model.B = d.B;
    d.model.mu = d.mu;
    d.model.kappa = d.A * x2 / std::pow(2.0, r);
    for (int m = 1; m <= beta; ++m) {
        const double log_binom = std::lgamma(beta) - std::lgamma(m) - std::lgamma(beta - m + 1);
        double log_am = log_binom + (1.0 - 0.5 * m) * std::log(gbo) - std::lgamma(m) + 0.5 * m * std::log(a / beta);
        if (m > 1) log_am += (m - 1) * (op > 0.0 ? std::log(op / g) : -INFINITY);
        const double log_bm = log_am - 0.5 * (a + m) * std::log(a * beta / gbo);
        d.a_m.push_back(std::exp(log_am));
        d.b_m.push_back(std::exp(log_bm));
        d.c_m.push_back(std::exp(log_bm + (a + m - 1.0) * std::log(static_cast<double>(r))));
        d.K2.push_back(d.model.K2(m));
        d.model.terms.push_back({static_cast<double>(m), std::exp(log_A + log_bm + std::log(x2) - r * std::log(2.0))});
    }
    return d;
}

inline double malaga_snr_pdf(const MalagaLink& link, double gamma) {
    return optical_snr_pdf(derive_malaga(link).model, gamma);
}

inline double malaga_snr_cdf(const MalagaLink& link, double gamma) {
    return optical_snr_cdf(derive_malaga(link).model, gamma);
}

}  // namespace fsorf::channels
