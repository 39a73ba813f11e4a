// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fsorf/secrecy/scenario.hpp"

namespace fsorf::secrecy {

enum class Topology { single, dual };

/// Outage event integrated by the quadrature oracle.
///   bound: F(Θγ), the published lower bound;  exact: F(Θγ + Θ - 1), the defining event.
enum class OutageEvent { bound, exact };

namespace detail {

struct QuadResult {
    double value;
    double error;
};

// ∫ F(Θγ [+Θ-1]) f(γ) dγ with γ = scale·e^x over [lo, hi].
inline QuadResult integrate_log_axis(const std::function<double(double)>& integrand, double lo, double hi) {
    using boost::math::quadrature::gauss_kronrod;
    double err = 0.0;
    const double v = gauss_kronrod<double, 31>::integrate(integrand, lo, hi, 25, 1e-12, &err);
    return {v, err};
}

// Range of x = ln(γ/scale) outside which the eavesdropper law has mass below `tail`.
inline void log_support(const std::function<double(double)>& cdf, const std::function<double(double)>& ccdf,
                        double& lo, double& hi, double tail = 1e-14) {
    lo = -2.0;
    while (cdf(std::exp(lo)) > tail && lo > -400.0) lo -= 2.0;
    hi = 2.0;
    while (ccdf(std::exp(hi)) > tail && hi < 400.0) hi += 2.0;
}

inline QuadResult optical_hop_outage(const OpticalSnrModel& main, const OpticalSnrModel& eve, double theta,
                                     OutageEvent event) {
    const double mu = eve.mu;
    auto cdf = [&](double u) { return channels::optical_snr_cdf(eve, mu * u); };
    auto ccdf = [&](double u) { return channels::optical_snr_ccdf(eve, mu * u); };
    double lo, hi;
    log_support(cdf, ccdf, lo, hi);
    const double shift = event == OutageEvent::exact ? theta - 1.0 : 0.0;
    auto f = [&](double x) {
        const double g = mu * std::exp(x);
        return channels::optical_snr_cdf(main, theta * g + shift) * channels::optical_snr_pdf(eve, g) * g;
    };
    return integrate_log_axis(f, lo, hi);
}

inline QuadResult rf_hop_outage(const NakagamiLink& main, const NakagamiLink& eve, double theta, OutageEvent event) {
    const double scale = eve.avg_snr;
    auto cdf = [&](double u) { return channels::nakagami_snr_cdf(eve, scale * u); };
    auto ccdf = [&](double u) { return channels::nakagami_snr_ccdf(eve, scale * u); };
    double lo, hi;
    log_support(cdf, ccdf, lo, hi);
    const double shift = event == OutageEvent::exact ? theta - 1.0 : 0.0;
    auto f = [&](double x) {
        const double g = scale * std::exp(x);
        return channels::nakagami_snr_cdf(main, theta * g + shift) * channels::nakagami_snr_pdf(eve, g) * g;
    };
    return integrate_log_axis(f, lo, hi);
}

}  // namespace detail

/// Direct numerical integration of the outage probability, the arbitration oracle for every closed form.
///
/// single: ∫ F_eq(Θγ) f_SE(γ) dγ with F_eq = 1 - (1-F_SR)(1-F_RD);
/// dual:   1 - (1 - ∫F_SR(Θγ)f_SE dγ)(1 - ∫F_RD(Θγ)f_RE2 dγ).
inline Estimate sop_quadrature(const SecrecyScenario& s, Topology topology, OutageEvent event = OutageEvent::bound) {
    s.validate();
    const auto sr = optical_model(s.sr);
    const auto se = optical_model(s.se1);
    const double theta = s.theta();
    const double shift = event == OutageEvent::exact ? theta - 1.0 : 0.0;

    if (topology == Topology::single) {
        const double mu = se.mu;
        auto cdf = [&](double u) { return channels::optical_snr_cdf(se, mu * u); };
        auto ccdf = [&](double u) { return channels::optical_snr_ccdf(se, mu * u); };
        double lo, hi;
        detail::log_support(cdf, ccdf, lo, hi);
        auto f = [&](double x) {
            const double g = mu * std::exp(x);
            const double arg = theta * g + shift;
            const double f_sr = channels::optical_snr_cdf(sr, arg);
            const double f_rd = channels::nakagami_snr_cdf(s.rd, arg);
            return (f_sr + f_rd - f_sr * f_rd) * channels::optical_snr_pdf(se, g) * g;
        };
        const auto q = detail::integrate_log_axis(f, lo, hi);
        return {q.value, q.error, Provenance::quadrature};
    }

    require(s.dual(), "sop_quadrature: dual topology needs the R-E2 link");
    const auto p1 = detail::optical_hop_outage(sr, se, theta, event);
    const auto p2 = detail::rf_hop_outage(s.rd, *s.re2, theta, event);
    const double value = 1.0 - (1.0 - p1.value) * (1.0 - p2.value);
    return {value, p1.error + p2.error, Provenance::quadrature};
}

/// Per-hop terms of the dual bound: I₁ = ∫F_SR(Θγ)f_SE dγ and ∫F_RD(Θγ)f_RE2 dγ.
struct HopOutages {
    Estimate optical;
    Estimate rf;
};

inline HopOutages hop_outages_quadrature(const SecrecyScenario& s) {
    s.validate();
    require(s.dual(), "hop_outages_quadrature: needs the R-E2 link");
    const auto p1 =
        detail::optical_hop_outage(optical_model(s.sr), optical_model(s.se1), s.theta(), OutageEvent::bound);
    const auto p2 = detail::rf_hop_outage(s.rd, *s.re2, s.theta(), OutageEvent::bound);
    return {{p1.value, p1.error, Provenance::quadrature}, {p2.value, p2.error, Provenance::quadrature}};
}

}  // namespace fsorf::secrecy
