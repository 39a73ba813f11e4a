// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "fsorf/error.hpp"
#include "fsorf/specfun/meijer_g.hpp"

namespace fsorf::channels {

/// Optical receiver detection scheme; the enumerator value is r.
enum class Detection : int { heterodyne = 1, intensity = 2 };

inline int detection_order(Detection d) { return static_cast<int>(d); }

/// Δ(x, y) = y/x, (y+1)/x, ..., (y+x-1)/x.
inline std::vector<double> delta(int x, double y) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(x));
    for (int i = 0; i < x; ++i) out.push_back((y + i) / x);
    return out;
}

inline void append(std::vector<double>& dst, const std::vector<double>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

/// One component of the optical SNR mixture: weight · G^{3,0}_{1,3}[... | ξ²+1 ; ξ², α, m] / γ.
struct MixtureTerm {
    double m = 1.0;
    double weight = 0.0;
};

/// SNR law shared by the Málaga and Gamma-Gamma links with pointing errors:
///
///   f(γ) = Σ_j W_j / γ · G^{3,0}_{1,3}[B (γ/μ)^{1/r} | ξ²+1 ; ξ², α, m_j].
///
/// For Málaga W_j = Aξ² b_j / 2^r; for Gamma-Gamma a single term m = β with W = ξ²/(rΓ(α)Γ(β)).
struct OpticalSnrModel {
    int r = 1;
    double xi2 = 1.0;
    double alpha = 1.0;
    double B = 1.0;
    double mu = 1.0;
    std::vector<MixtureTerm> terms;
    /// Common factor of the weights as written in the closed forms (Aξ²/2^r for Málaga, A for Gamma-Gamma).
    double kappa = 1.0;

    /// E = B^r / r^{2r}, the scale of the CDF argument.
    double E() const { return std::pow(B, r) / std::pow(static_cast<double>(r), 2 * r); }

    /// K1 = Δ(r, ξ²+1).
    std::vector<double> K1() const { return delta(r, xi2 + 1.0); }

    /// K2 = [Δ(r, ξ²), Δ(r, α), Δ(r, m)].
    std::vector<double> K2(double m) const {
        auto k = delta(r, xi2);
        append(k, delta(r, alpha));
        append(k, delta(r, m));
        return k;
    }

    /// Coefficient W_j r^{α+m_j-1} / (2π)^{r-1} multiplying the G^{3r,1} CDF and G^{3r+1,0} CCDF terms.
    double cdf_coefficient(const MixtureTerm& t) const {
        return t.weight * std::pow(static_cast<double>(r), alpha + t.m - 1.0) /
               std::pow(2.0 * std::numbers::pi, r - 1);
    }

    /// Σ_j W_j r Γ(α) Γ(m_j) / ξ²; equals 1 for a properly normalized law.
    double total_mass() const {
        double s = 0.0;
        for (const auto& t : terms)
            s += t.weight * r * std::exp(std::lgamma(alpha) + std::lgamma(t.m)) / xi2;
        return s;
    }

    /// E[γ^n] = Σ_j W_j r μ^n B^{-rn} Γ(ξ²+rn) Γ(α+rn) Γ(m_j+rn) / Γ(ξ²+1+rn).
    double moment(double n) const {
        const double q = r * n;
        double s = 0.0;
        for (const auto& t : terms)
            s += t.weight * std::exp(std::lgamma(xi2 + q) + std::lgamma(alpha + q) + std::lgamma(t.m + q) -
                                     std::lgamma(xi2 + 1.0 + q));
        return s * r * std::pow(mu, n) * std::pow(B, -q);
    }

    specfun::MeijerGSpec pdf_kernel(double m) const {
        return specfun::MeijerGSpec(3, 0, {xi2 + 1.0}, {xi2, alpha, m});
    }

    /// G^{3r,1}_{r+1,3r+1}[· | 1, K1 ; K2, 0].
    specfun::MeijerGSpec cdf_kernel(double m) const {
        std::vector<double> a{1.0};
        append(a, K1());
        auto b = K2(m);
        b.push_back(0.0);
        return specfun::MeijerGSpec(static_cast<std::size_t>(3 * r), 1, std::move(a), std::move(b));
    }

    /// G^{3r+1,0}_{r+1,3r+1}[· | 1, K1 ; K2, 0].
    specfun::MeijerGSpec ccdf_kernel(double m) const {
        std::vector<double> a{1.0};
        append(a, K1());
        auto b = K2(m);
        b.push_back(0.0);
        return specfun::MeijerGSpec(static_cast<std::size_t>(3 * r + 1), 0, std::move(a), std::move(b));
    }
};

inline double optical_snr_pdf(const OpticalSnrModel& model, double gamma,
                              const specfun::ContourConfig& cfg = {}) {
    require(gamma > 0.0, "optical_snr_pdf: gamma must be positive");
    const double u = model.B * std::pow(gamma / model.mu, 1.0 / model.r);
    double s = 0.0;
    for (const auto& t : model.terms) s += t.weight * specfun::meijer_g(model.pdf_kernel(t.m), u, cfg);
    return s / gamma;
}

inline double optical_snr_cdf(const OpticalSnrModel& model, double gamma,
                              const specfun::ContourConfig& cfg = {}) {
    require(gamma >= 0.0, "optical_snr_cdf: gamma must be non-negative");
    if (gamma == 0.0) return 0.0;
    if (std::isinf(gamma)) return 1.0;
    const double z = model.E() * gamma / model.mu;
    double s = 0.0;
    for (const auto& t : model.terms) s += model.cdf_coefficient(t) * specfun::meijer_g(model.cdf_kernel(t.m), z, cfg);
    return s;
}

inline double optical_snr_ccdf(const OpticalSnrModel& model, double gamma,
                               const specfun::ContourConfig& cfg = {}) {
    require(gamma >= 0.0, "optical_snr_ccdf: gamma must be non-negative");
    if (gamma == 0.0) return 1.0;
    if (std::isinf(gamma)) return 0.0;
    const double z = model.E() * gamma / model.mu;
    double s = 0.0;
    for (const auto& t : model.terms)
        s += model.cdf_coefficient(t) * specfun::meijer_g(model.ccdf_kernel(t.m), z, cfg);
    return s;
}

}  // namespace fsorf::channels
