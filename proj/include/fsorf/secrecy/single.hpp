// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "fsorf/specfun/fox_h_bivariate.hpp"
#include "fsorf/secrecy/scenario.hpp"

namespace fsorf::secrecy {

/// Bivariate H kernel of the single-eavesdropper SOP:
///   joint (a; 1, 1) with n1 = 1,
///   first  H^{3r+1,0}_{r+1,3r+1}[· | (K1,[1]_r),(1,1) ; (K2,[1]_{3r}),(0,1)]   (S-R CCDF),
///   second H^{3,0}_{1,3}[· | (ξ²+1, r) ; (ξ², r),(α, r),(m₂, r)]              (S-E1 pdf).
/// The joint parameter is a = 1 - k' for the k'-th term of the Nakagami series.
inline specfun::FoxHBivarSpec single_sop_kernel(const OpticalSnrModel& sr, double m1, const OpticalSnrModel& se,
                                                double m2, double joint_value) {
    using specfun::HParam;
    auto a1 = specfun::with_unit_scales(sr.K1());
    a1.push_back({1.0, 1.0});
    auto b1 = specfun::with_unit_scales(sr.K2(m1));
    b1.push_back({0.0, 1.0});
    const auto order = static_cast<std::size_t>(3 * sr.r + 1);
    specfun::FoxHSpec first(order, 0, std::move(a1), std::move(b1));
    const double r = se.r;
    specfun::FoxHSpec second(3, 0, {{se.xi2 + 1.0, r}}, {{se.xi2, r}, {se.alpha, r}, {m2, r}});
    return specfun::FoxHBivarSpec(1, {{joint_value, 1.0, 1.0}}, {}, std::move(first), std::move(second));
}

namespace detail {

struct SingleArguments {
    double x;
    double y;
};

inline SingleArguments single_arguments(const SecrecyScenario& s, const OpticalSnrModel& sr,
                                        const OpticalSnrModel& se, const Corrections& c, bool avg_snr_as_mu) {
    const double m_rd = s.rd.m, g_rd = s.rd.avg_snr, theta = s.theta();
    const double mu_sr = avg_snr_as_mu ? optical_avg_snr(s.sr) : sr.mu;
    const double mu_se = avg_snr_as_mu ? optical_avg_snr(s.se1) : se.mu;
    const double b_se = std::pow(se.B, se.r);
    if (c.upsilon_from_integrand) return {sr.E() * g_rd / (mu_sr * m_rd), b_se * g_rd / (m_rd * theta * mu_se)};
    // υ₁ = B^r/(μ m_RD r^{2r}), υ₂ = B^r γ̄_RD/(μ γ̄_SE m Θ) with m read as m_RD.
    return {sr.E() / (mu_sr * m_rd), b_se * g_rd / (mu_se * optical_avg_snr(s.se1) * m_rd * theta)};
}

inline Estimate sop_single_impl(const SecrecyScenario& s, const Corrections& c, bool avg_snr_as_mu,
                                const specfun::ContourConfig& cfg) {
    s.validate();
    const auto sr = optical_model(s.sr);
    const auto se = optical_model(s.se1);
    const auto [x, y] = single_arguments(s, sr, se, c, avg_snr_as_mu);
    const int m_rd = s.rd.m;
    const double lambda = m_rd * s.theta() / s.rd.avg_snr;

    double prefactor = 1.0;
    if (!c.prefactor) prefactor = (m_rd - 1) / std::tgamma(m_rd);

    double success = 0.0, error = 0.0;
    double inv_factorial = 1.0;
    for (int k = 0; k < m_rd; ++k) {
        if (k > 0) inv_factorial /= k;
        const double joint = c.k_structure ? 1.0 - k : 1.0;
        const double series = inv_factorial * (c.k_structure ? 1.0 : std::pow(lambda, k));
        for (const auto& t1 : sr.terms) {
            const double c1 = sr.cdf_coefficient(t1);
            for (const auto& t2 : se.terms) {
                const auto spec = single_sop_kernel(sr, t1.m, se, t2.m, joint);
                const auto h = specfun::fox_h_bivariate_eval(spec, x, y, cfg);
                const double w = prefactor * series * c1 * t2.weight * se.r;
                success += w * h.value;
                error += std::abs(w) * h.error_estimate;
            }
        }
    }
    return checked_probability(1.0 - success, error, provenance_for(c), "sop_single: result outside [0, 1]");
}

}  // namespace detail

/// Lower bound SOP_L₁ of the single-eavesdropper secrecy outage probability,
///   1 - Σ_{k'<m_RD} (1/k'!) Σ_{j₁,j₂} C_{SR,j₁} W_{SE,j₂} r_SE H_{k'}(x, y),
/// with x = E_SR γ̄_RD/(μ_SR m_RD) and y = B_SE^{r} γ̄_RD/(m_RD Θ μ_SE).
inline Estimate sop_single(const SecrecyScenario& s, const Corrections& c,
                           const specfun::ContourConfig& cfg = specfun::ContourConfig::bivariate()) {
    return detail::sop_single_impl(s, c, false, cfg);
}

inline Estimate sop_single(const SecrecyScenario& s, Mode mode = Mode::validated) {
    return sop_single(s, Corrections::for_mode(mode));
}

/// Gamma-Gamma / Rayleigh special case (m_RD = 1). The published form writes the H arguments with γ̄ in
/// place of μ_r, which differs from the general result under IM/DD; `validated` uses μ_r.
inline Estimate sop_single_gg(const SecrecyScenario& s, Mode mode = Mode::validated) {
    require(is_gamma_gamma(s.sr) && is_gamma_gamma(s.se1), "sop_single_gg: optical links must be Gamma-Gamma");
    require(s.rd.m == 1, "sop_single_gg: the R-D link must be Rayleigh (m = 1)");
    const auto c = Corrections::validated();
    auto e = detail::sop_single_impl(s, c, mode == Mode::as_printed, specfun::ContourConfig::bivariate());
    e.provenance = mode == Mode::validated ? Provenance::closed_form_validated : Provenance::closed_form_as_printed;
    return e;
}

/// SPSC₁ = 1 - SOP_L₁ at R_s = 0.
inline Estimate spsc_single(const SecrecyScenario& s, Mode mode = Mode::validated) {
    const auto e = sop_single(s.with_rate(0.0), mode);
    return {1.0 - e.value, e.error_bound, e.provenance};
}

}  // namespace fsorf::secrecy
