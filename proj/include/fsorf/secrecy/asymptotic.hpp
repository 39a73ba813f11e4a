// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <limits>

#include "fsorf/secrecy/dual.hpp"

namespace fsorf::secrecy {

/// High-SNR optical-hop outage: each G(Z) replaced by its leading residues in Z^{a_k-1}. With mixed
/// detection the Fox H form is expanded instead, keeping r_SR residues per Γ(b_j + s) so that the
/// exponents match those of the G form.
inline double optical_hop_outage_asym(const SecrecyScenario& s, const Corrections& c = Corrections::validated()) {
    const auto sr = optical_model(s.sr);
    const auto se = optical_model(s.se1);
    if (sr.r != se.r) {
        const double x = detail::optical_hop_argument_h(s, sr, se);
        const double extra = c.varpi_once ? 1.0 : detail::printed_varpi_factor(sr, se);
        double v = 0.0;
        for (const auto& t1 : sr.terms)
            for (const auto& t2 : se.terms)
                v += extra * t1.weight * sr.r * t2.weight * se.r *
                     specfun::fox_h_small_argument(optical_hop_kernel_h(sr, t1.m, se, t2.m), x, sr.r);
        return v;
    }
    const double z = detail::optical_hop_argument(s, sr, se, c.upsilon_from_integrand);
    const double extra = c.varpi_once ? 1.0 : detail::printed_varpi_factor(sr, se);
    double v = 0.0;
    for (const auto& t1 : sr.terms)
        for (const auto& t2 : se.terms)
            v += extra * sr.cdf_coefficient(t1) * se.cdf_coefficient(t2) *
                 specfun::meijer_g_large_argument(optical_hop_kernel(sr, t1.m, se, t2.m), z);
    return v;
}

/// Slope of the asymptotic outage on log-log axes against γ̄_SR: max_k (a_k - 1) = -min K2_SR.
inline double optical_hop_diversity_slope(const SecrecyScenario& s) {
    const auto sr = optical_model(s.sr);
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& t : sr.terms)
        for (double v : sr.K2(t.m)) smallest = std::min(smallest, v);
    return -smallest;
}

/// Leading R-D hop term Pr(γ_RD ≤ Θγ_SE) ≈ (m_RD Θ/γ̄_RD)^{m_RD} E[γ_SE^{m_RD}] / m_RD!.
inline double rf_hop_outage_asym(const SecrecyScenario& s) {
    const int m = s.rd.m;
    const double scale = m * s.theta() / s.rd.avg_snr;
    return std::exp(m * std::log(scale) - std::lgamma(m + 1.0)) * optical_model(s.se1).moment(m);
}

/// SOP_L₁^∞: leading optical-hop residues, plus the leading R-D term when that hop is not dropped.
inline Estimate sop_single_asym(const SecrecyScenario& s, Mode mode = Mode::validated) {
    s.validate();
    const auto c = Corrections::for_mode(mode);
    double v = optical_hop_outage_asym(s, c);
    if (c.rd_hop_asymptote) v += rf_hop_outage_asym(s);
    return {v, 0.0, Provenance::asymptotic};
}

inline Estimate spsc_single_asym(const SecrecyScenario& s, Mode mode = Mode::validated) {
    const auto e = sop_single_asym(s.with_rate(0.0), mode);
    return {1.0 - e.value, 0.0, Provenance::asymptotic};
}

/// SOP_L₂^∞ = 1 - (1 - I₁^∞) Λ.
inline Estimate sop_dual_asym(const SecrecyScenario& s, Mode mode = Mode::validated) {
    s.validate();
    require(s.dual(), "sop_dual_asym: scenario has no R-E2 link");
    const auto c = Corrections::for_mode(mode);
    const double lambda = rf_hop_secrecy(s, c.lambda_from_zero);
    return {1.0 - (1.0 - optical_hop_outage_asym(s, c)) * lambda, 0.0, Provenance::asymptotic};
}

inline Estimate spsc_dual_asym(const SecrecyScenario& s, Mode mode = Mode::validated) {
    const auto e = sop_dual_asym(s.with_rate(0.0), mode);
    return {1.0 - e.value, 0.0, Provenance::asymptotic};
}

}  // namespace fsorf::secrecy
