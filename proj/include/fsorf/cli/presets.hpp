// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fsorf/cli/config.hpp"

namespace fsorf::cli {

/// Turbulence presets of the numerical section: strong (α=2.296, β=2) and moderate (α=4.2, β=3).
/// The scatter parameters (ρ=0.95, b₀=0.25, Ω=0.5, φ=π/2) give g + Ω' = 1.
inline channels::MalagaLink malaga_preset(const std::string& name, double xi, channels::Detection d, double snr_db) {
    channels::MalagaLink l;
    if (name == "strong") {
        l.alpha = 2.296;
        l.beta = 2;
    } else if (name == "moderate") {
        l.alpha = 4.2;
        l.beta = 3;
    } else {
        throw config_error("unknown turbulence preset '" + name + "'");
    }
    l.xi = xi;
    l.detection = d;
    l.avg_snr = channels::db_to_linear(snr_db);
    return l;
}

inline channels::GammaGammaLink gamma_gamma_preset(const std::string& name, double xi, channels::Detection d,
                                                   double snr_db) {
    const auto m = malaga_preset(name, xi, d, snr_db);
    return {m.alpha, static_cast<double>(m.beta), xi, d, m.avg_snr};
}

/// Average SNRs of the figure presets. The published figures do not state them; these are guesses.
struct FigureBaseline {
    double sr_db = 30.0;
    double se1_db = 10.0;
    double re2_db = 10.0;
    int m_re2 = 2;
    double rs = 0.01;
    double start_db = 0.0;
    double stop_db = 40.0;
    double step_db = 5.0;
};

struct Curve {
    std::string name;
    SweepConfig config;
};

struct Figure {
    std::string name;
    std::vector<Curve> curves;
};

namespace detail {

inline std::string xi_label(double xi) {
    auto s = std::to_string(xi);
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
    return s;
}

inline SweepConfig figure_sweep(const secrecy::SecrecyScenario& s, secrecy::Topology t, std::vector<MetricSpec> metrics,
                                const FigureBaseline& b) {
    SweepConfig c;
    c.scenario = s;
    c.topology = t;
    c.variable = SweepVariable::rd;
    c.start_db = b.start_db;
    c.stop_db = b.stop_db;
    c.step_db = b.step_db;
    c.metrics = std::move(metrics);
    return c;
}

}  // namespace detail

/// Single-eavesdropper scenario of Figs. 2 and 4. The figure parameters (turbulence, ξ, r) describe
/// the S-R link; E1 is a fixed reference link (strong turbulence, ξ = 1.1, heterodyne).
inline secrecy::SecrecyScenario single_scenario(const std::string& turbulence, double xi, channels::Detection d,
                                                double rd_db, int m_rd = 2, const FigureBaseline& b = {}) {
    secrecy::SecrecyScenario s;
    s.sr = malaga_preset(turbulence, xi, d, b.sr_db);
    s.se1 = malaga_preset("strong", 1.1, channels::Detection::heterodyne, b.se1_db);
    s.rd = {m_rd, channels::db_to_linear(rd_db)};
    s.rs = b.rs;
    return s;
}

/// Gamma-Gamma / Rayleigh scenario of Figs. 3 and 5 (m_RD = 1, ξ = 1.1).
inline secrecy::SecrecyScenario gamma_gamma_scenario(const std::string& turbulence, channels::Detection d,
                                                     double rd_db, const FigureBaseline& b = {}) {
    secrecy::SecrecyScenario s;
    s.sr = gamma_gamma_preset(turbulence, 1.1, d, b.sr_db);
    s.se1 = gamma_gamma_preset("strong", 1.1, channels::Detection::heterodyne, b.se1_db);
    s.rd = {1, channels::db_to_linear(rd_db)};
    s.rs = b.rs;
    return s;
}

/// Dual-eavesdropper scenario of Figs. 6 and 7. E1 shares the detection scheme of S-R, which the
/// optical-hop Meijer G form requires; its turbulence and ξ stay at the reference values.
inline secrecy::SecrecyScenario dual_scenario(const std::string& turbulence, double xi, channels::Detection d,
                                              double rd_db, const FigureBaseline& b = {}) {
    secrecy::SecrecyScenario s;
    s.sr = malaga_preset(turbulence, xi, d, b.sr_db);
    s.se1 = malaga_preset("strong", 1.1, d, b.se1_db);
    s.rd = {2, channels::db_to_linear(rd_db)};
    s.re2 = channels::NakagamiLink{b.m_re2, channels::db_to_linear(b.re2_db)};
    s.rs = b.rs;
    return s;
}

inline const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names{"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
    return names;
}

inline Figure figure_preset(const std::string& name, const FigureBaseline& b = {}) {
    using channels::Detection;
    const std::vector<std::string> regimes{"strong", "moderate"};
    const std::vector<double> xis{1.1, 6.7};
    const std::vector<Detection> schemes{Detection::heterodyne, Detection::intensity};
    auto r_label = [](Detection d) { return d == Detection::heterodyne ? std::string("r1") : std::string("r2"); };
    const MetricSpec sop_closed{Quantity::sop, Method::closed}, sop_asym{Quantity::sop, Method::asym},
        sop_mc{Quantity::sop, Method::mc}, spsc_closed{Quantity::spsc, Method::closed},
        spsc_asym{Quantity::spsc, Method::asym}, spsc_mc{Quantity::spsc, Method::mc};
    Figure f{name, {}};
    if (name == "fig2" || name == "fig4") {
        const bool sop = name == "fig2";
        for (const auto& t : regimes)
            for (double xi : xis)
                for (auto d : schemes)
                    f.curves.push_back({name + "_" + t + "_" + r_label(d) + "_xi" + detail::xi_label(xi),
                                        detail::figure_sweep(single_scenario(t, xi, d, b.start_db, 2, b),
                                                             secrecy::Topology::single,
                                                             sop ? std::vector{sop_closed, sop_asym, sop_mc}
                                                                 : std::vector{spsc_closed, spsc_asym, spsc_mc},
                                                             b)});
    } else if (name == "fig3" || name == "fig5") {
        const bool sop = name == "fig3";
        for (const auto& t : regimes)
            for (auto d : schemes)
                f.curves.push_back({name + "_" + t + "_" + r_label(d) + "_xi1.1",
                                    detail::figure_sweep(gamma_gamma_scenario(t, d, b.start_db, b),
                                                         secrecy::Topology::single,
                                                         sop ? std::vector{sop_closed, sop_asym, sop_mc}
                                                             : std::vector{spsc_closed, spsc_asym, spsc_mc},
                                                         b)});
    } else if (name == "fig6" || name == "fig7") {
        const auto d = name == "fig6" ? Detection::intensity : Detection::heterodyne;
        for (const auto& t : regimes)
            for (double xi : xis)
                f.curves.push_back({name + "_" + t + "_" + r_label(d) + "_xi" + detail::xi_label(xi),
                                    detail::figure_sweep(dual_scenario(t, xi, d, b.start_db, b),
                                                         secrecy::Topology::dual, {sop_closed, sop_asym, sop_mc}, b)});
    } else {
        throw config_error("unknown figure '" + name + "' (expected fig2..fig7)");
    }
    return f;
}

}  // namespace fsorf::cli
