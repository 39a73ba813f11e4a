// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "fsorf/specfun/fox_h.hpp"
#include "fsorf/specfun/meijer_g.hpp"
#include "fsorf/secrecy/scenario.hpp"

namespace fsorf::secrecy {

/// G^{3r+1,3r}_{4r+1,4r+1}[Z | 1-K2_SR(m₁), 1, Δ(r,ξ²_SE+1) ; Δ(r,ξ²_SE), Δ(r,α_SE), Δ(r,m₂), 0, 1-K1_SR]
/// of the optical-hop outage ∫F_SR(Θγ) f_SE(γ) dγ.
inline specfun::MeijerGSpec optical_hop_kernel(const OpticalSnrModel& sr, double m1, const OpticalSnrModel& se,
                                               double m2) {
    require(sr.r == se.r, "optical_hop_kernel: S-R and S-E1 must use the same detection scheme");
    const int r = sr.r;
    std::vector<double> a;
    for (double v : sr.K2(m1)) a.push_back(1.0 - v);
    a.push_back(1.0);
    channels::append(a, se.K1());
    auto b = se.K2(m2);
    b.push_back(0.0);
    for (double v : sr.K1()) b.push_back(1.0 - v);
    return specfun::MeijerGSpec(static_cast<std::size_t>(3 * r + 1), static_cast<std::size_t>(3 * r), std::move(a),
                                std::move(b));
}

/// Mixed-detection form of the same outage, one (m₁, m₂) term without the W₁ r₁ W₂ r₂ weight:
///   H^{3,4}_{5,5}[c | (1,1), (1-ξ²_SE,ρ), (1-α_SE,ρ), (1-m₂,ρ), (ξ²_SR+1,1) ;
///                     (ξ²_SR,1), (α_SR,1), (m₁,1), (-ξ²_SE,ρ), (0,1)],
/// ρ = r_SE/r_SR, c = B_SR (Θ μ_SE/μ_SR)^{1/r_SR} B_SE^{-ρ}.
inline specfun::FoxHSpec optical_hop_kernel_h(const OpticalSnrModel& sr, double m1, const OpticalSnrModel& se,
                                              double m2) {
    const double rho = static_cast<double>(se.r) / sr.r;
    return specfun::FoxHSpec(3, 4,
                             {{1.0, 1.0}, {1.0 - se.xi2, rho}, {1.0 - se.alpha, rho}, {1.0 - m2, rho}, {sr.xi2 + 1.0, 1.0}},
                             {{sr.xi2, 1.0}, {sr.alpha, 1.0}, {m1, 1.0}, {-se.xi2, rho}, {0.0, 1.0}});
}

namespace detail {

inline double optical_hop_argument_h(const SecrecyScenario& s, const OpticalSnrModel& sr, const OpticalSnrModel& se) {
    const double rho = static_cast<double>(se.r) / sr.r;
    return sr.B * std::pow(s.theta() * se.mu / sr.mu, 1.0 / sr.r) * std::pow(se.B, -rho);
}

inline double optical_hop_argument(const SecrecyScenario& s, const OpticalSnrModel& sr, const OpticalSnrModel& se,
                                   bool from_integrand) {
    if (!from_integrand) return optical_avg_snr(s.sr) / (s.theta() * optical_avg_snr(s.se1));
    return sr.mu * std::pow(se.B, se.r) / (s.theta() * se.mu * std::pow(sr.B, sr.r));
}

// Extra (ξ²A/(2^r(2π)^{r-1}))² of the printed form, one factor per optical link.
inline double printed_varpi_factor(const OpticalSnrModel& sr, const OpticalSnrModel& se) {
    return sr.kappa / std::pow(2.0 * std::numbers::pi, sr.r - 1) * se.kappa / std::pow(2.0 * std::numbers::pi, se.r - 1);
}

}  // namespace detail

/// Optical-hop outage I₁ = Σ_{j₁,j₂} C_{SR,j₁} D_{SE,j₂} G(Z). When S-R and S-E1 use different detection
/// schemes the Fox H form is used instead; its argument always comes from the integrand.
inline Estimate optical_hop_outage(const SecrecyScenario& s, const Corrections& c,
                                   const specfun::ContourConfig& cfg = {}) {
    const auto sr = optical_model(s.sr);
    const auto se = optical_model(s.se1);
    if (sr.r != se.r) {
        const double x = detail::optical_hop_argument_h(s, sr, se);
        const double extra = c.varpi_once ? 1.0 : detail::printed_varpi_factor(sr, se);
        double v = 0.0, err = 0.0;
        for (const auto& t1 : sr.terms)
            for (const auto& t2 : se.terms) {
                const auto h = specfun::fox_h_eval(optical_hop_kernel_h(sr, t1.m, se, t2.m), x, cfg);
                const double w = extra * t1.weight * sr.r * t2.weight * se.r;
                v += w * h.value;
                err += std::abs(w) * h.error_estimate;
            }
        return {v, err, provenance_for(c)};
    }
    const double z = detail::optical_hop_argument(s, sr, se, c.upsilon_from_integrand);
    const double extra = c.varpi_once ? 1.0 : detail::printed_varpi_factor(sr, se);
    double v = 0.0, err = 0.0;
    for (const auto& t1 : sr.terms)
        for (const auto& t2 : se.terms) {
            const auto g = specfun::meijer_g_eval(optical_hop_kernel(sr, t1.m, se, t2.m), z, cfg);
            const double w = extra * sr.cdf_coefficient(t1) * se.cdf_coefficient(t2);
            v += w * g.value;
            err += std::abs(w) * g.error_estimate;
        }
    return {v, err, provenance_for(c)};
}

/// Λ = Pr[γ_RD > Θγ_RE2] = Σ_{k<m_RD} (1/k!) λ^k (m_E/γ̄_E)^{m_E} Γ(m_E+k) / (Γ(m_E) (λ + m_E/γ̄_E)^{m_E+k}),
/// λ = m_RD Θ/γ̄_RD. The printed sum starts at k = 1.
inline double rf_hop_secrecy(const SecrecyScenario& s, bool from_zero = true) {
    require(s.dual(), "rf_hop_secrecy: needs the R-E2 link");
    const int m = s.rd.m, me = s.re2->m;
    const double lambda = m * s.theta() / s.rd.avg_snr;
    const double nu = me / s.re2->avg_snr;
    double sum = 0.0;
    for (int k = from_zero ? 0 : 1; k < m; ++k) {
        const double log_term = -std::lgamma(k + 1.0) + k * std::log(lambda) + me * std::log(nu) +
                                std::lgamma(me + k) - std::lgamma(me) - (me + k) * std::log(lambda + nu);
        sum += std::exp(log_term);
    }
    return sum;
}

/// SOP_L₂ = 1 - (1 - I₁) Λ for eavesdroppers on both hops.
inline Estimate sop_dual(const SecrecyScenario& s, const Corrections& c, const specfun::ContourConfig& cfg = {}) {
    s.validate();
    require(s.dual(), "sop_dual: scenario has no R-E2 link");
    const auto p1 = optical_hop_outage(s, c, cfg);
    const double lambda = rf_hop_secrecy(s, c.lambda_from_zero);
    return detail::checked_probability(1.0 - (1.0 - p1.value) * lambda, p1.error_bound * lambda, provenance_for(c),
                                       "sop_dual: result outside [0, 1]");
}

inline Estimate sop_dual(const SecrecyScenario& s, Mode mode = Mode::validated) {
    return sop_dual(s, Corrections::for_mode(mode));
}

/// SPSC₂ = 1 - SOP_L₂ at R_s = 0 (Λ becomes Λ').
inline Estimate spsc_dual(const SecrecyScenario& s, Mode mode = Mode::validated) {
    const auto e = sop_dual(s.with_rate(0.0), mode);
    return {1.0 - e.value, e.error_bound, e.provenance};
}

}  // namespace fsorf::secrecy
