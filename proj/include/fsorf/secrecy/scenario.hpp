// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <optional>
#include <string_view>
#include <variant>

#include "fsorf/channels/gamma_gamma.hpp"
#include "fsorf/channels/malaga.hpp"
#include "fsorf/channels/nakagami.hpp"
#include "fsorf/error.hpp"

namespace fsorf::secrecy {

using channels::GammaGammaLink;
using channels::MalagaLink;
using channels::NakagamiLink;
using channels::OpticalSnrModel;

using OpticalLink = std::variant<MalagaLink, GammaGammaLink>;

inline OpticalSnrModel optical_model(const OpticalLink& link) {
    return std::visit(
        [](const auto& l) {
            if constexpr (std::is_same_v<std::decay_t<decltype(l)>, MalagaLink>)
                return channels::derive_malaga(l).model;
            else
                return channels::gamma_gamma_link(l).model;
        },
        link);
}

inline double optical_avg_snr(const OpticalLink& link) {
    return std::visit([](const auto& l) { return l.avg_snr; }, link);
}

inline void set_optical_avg_snr(OpticalLink& link, double value) {
    std::visit([value](auto& l) { l.avg_snr = value; }, link);
}

inline bool is_gamma_gamma(const OpticalLink& link) { return std::holds_alternative<GammaGammaLink>(link); }

/// S→R→D relay with an optical eavesdropper E1 and an optional RF eavesdropper E2.
struct SecrecyScenario {
    OpticalLink sr;
    OpticalLink se1;
    NakagamiLink rd;
    std::optional<NakagamiLink> re2;
    /// Target secrecy rate in nats/s/Hz.
    double rs = 0.01;

    double theta() const { return std::exp(rs); }
    bool dual() const { return re2.has_value(); }

    void validate() const {
        require(rs >= 0.0 && std::isfinite(rs), "SecrecyScenario: secrecy rate must be non-negative");
        std::visit([](const auto& l) { l.validate(); }, sr);
        std::visit([](const auto& l) { l.validate(); }, se1);
        rd.validate();
        if (re2) re2->validate();
    }

    SecrecyScenario with_rate(double rate) const {
        auto s = *this;
        s.rs = rate;
        return s;
    }
};

enum class Provenance { closed_form_as_printed, closed_form_validated, quadrature, asymptotic, monte_carlo };

inline std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::closed_form_as_printed: return "closed_form_as_printed";
        case Provenance::closed_form_validated: return "closed_form_validated";
        case Provenance::quadrature: return "quadrature";
        case Provenance::asymptotic: return "asymptotic";
        case Provenance::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

struct Estimate {
    double value = 0.0;
    double error_bound = 0.0;
    Provenance provenance = Provenance::closed_form_validated;
};

enum class Mode { as_printed, validated };

/// Individual departures from the published closed forms. `validated` enables all of them.
struct Corrections {
    /// Drop the (m_RD - 1)/Γ(m_RD) prefactor.
    bool prefactor = true;
    /// Start the Λ sum at k = 0.
    bool lambda_from_zero = true;
    /// Apply (ξ²A/(2^r(2π)^{r-1}))² once, inside ϖ.
    bool varpi_once = true;
    /// H and G arguments taken from the defining integrals rather than the printed υ₁, υ₂ (and γ̄_SR/(Θγ̄_SE)).
    bool upsilon_from_integrand = true;
    /// Joint block (1-k'; 1, 1) per series index, with no extra (m_RD Θ/γ̄_RD)^{k'} factor.
    bool k_structure = true;
    /// Single-eavesdropper asymptote also keeps the leading R-D hop term.
    bool rd_hop_asymptote = true;

    static Corrections validated() { return {}; }
    static Corrections as_printed() { return {false, false, false, false, false, false}; }
    static Corrections for_mode(Mode m) { return m == Mode::validated ? validated() : as_printed(); }
    bool all() const {
        return prefactor && lambda_from_zero && varpi_once && upsilon_from_integrand && k_structure &&
               rd_hop_asymptote;
    }
};

inline Provenance provenance_for(const Corrections& c) {
    return c.all() ? Provenance::closed_form_validated : Provenance::closed_form_as_printed;
}

namespace detail {

// Closed-form probabilities are not clamped; values outside [0, 1] beyond the error bound are errors.
inline Estimate checked_probability(double value, double error_bound, Provenance p, const char* what) {
    const double slack = std::max(error_bound, 1e-12);
    if (!std::isfinite(value) || value < -slack || value > 1.0 + slack) throw out_of_range_result(what, value);
    return {value, error_bound, p};
}

}  // namespace detail

}  // namespace fsorf::secrecy
