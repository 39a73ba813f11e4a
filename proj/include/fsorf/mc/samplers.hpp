// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <random>
#include <variant>

#include "fsorf/channels/gamma_gamma.hpp"
#include "fsorf/channels/malaga.hpp"
#include "fsorf/channels/nakagami.hpp"
#include "fsorf/secrecy/scenario.hpp"

namespace fsorf::mc {

namespace detail {

template <class Engine>
double uniform_open(Engine& e) {
    // (0, 1): 53 random bits offset by half an ulp.
    return (static_cast<double>(e() >> 11) + 0.5) * 0x1.0p-53;
}

template <class Engine>
double unit_mean_gamma(Engine& e, double shape) {
    std::gamma_distribution<double> d(shape, 1.0 / shape);
    return d(e);
}

}  // namespace detail

/// Physical Málaga irradiance sampler.
///
/// I = X · Y · P with X ~ Gamma(α) of unit mean, Y = |√(G Ω') + U_S|², G ~ Gamma(β) of unit mean,
/// U_S circular Gaussian of power g, and the pointing loss P = U^{1/ξ²}. The SNR is μ₁ I/E[I] for
/// heterodyne and μ₂ (I/E[I])² for IM/DD detection, which reproduces the pdf written with μ_r.
class MalagaSampler {
public:
    explicit MalagaSampler(const channels::MalagaLink& link) {
        link.validate();
        const auto d = channels::derive_malaga(link);
        alpha_ = link.alpha;
        beta_ = link.beta;
        g_ = d.g;
        omega_prime_ = d.omega_prime;
        inv_xi2_ = 1.0 / (link.xi * link.xi);
        r_ = channels::detection_order(link.detection);
        mu_ = d.mu;
        mean_ = (g_ + omega_prime_) * link.xi * link.xi / (link.xi * link.xi + 1.0);
    }

    template <class Engine>
    double operator()(Engine& e) const {
        const double x = detail::unit_mean_gamma(e, alpha_);
        const double shadow = omega_prime_ > 0.0 ? detail::unit_mean_gamma(e, beta_) : 0.0;
        std::normal_distribution<double> n(0.0, std::sqrt(0.5 * g_));
        const double re = std::sqrt(shadow * omega_prime_) + n(e);
        const double im = n(e);
        const double p = std::pow(detail::uniform_open(e), inv_xi2_);
        const double normalized = x * (re * re + im * im) * p / mean_;
        return r_ == 1 ? mu_ * normalized : mu_ * normalized * normalized;
    }

private:
    double alpha_ = 1.0, beta_ = 1.0, g_ = 0.0, omega_prime_ = 0.0, inv_xi2_ = 1.0, mu_ = 1.0, mean_ = 1.0;
    int r_ = 1;
};

/// Gamma-Gamma sampler: I = X · Y · P with X, Y unit-mean Gamma(α), Gamma(β) variates.
class GammaGammaSampler {
public:
    explicit GammaGammaSampler(const channels::GammaGammaLink& link) {
        link.validate();
        const auto d = channels::gamma_gamma_link(link);
        alpha_ = link.alpha;
        beta_ = link.beta;
        inv_xi2_ = 1.0 / (link.xi * link.xi);
        r_ = channels::detection_order(link.detection);
        mu_ = d.mu;
        mean_ = d.h;
    }

    template <class Engine>
    double operator()(Engine& e) const {
        const double x = detail::unit_mean_gamma(e, alpha_);
        const double y = detail::unit_mean_gamma(e, beta_);
        const double p = std::pow(detail::uniform_open(e), inv_xi2_);
        const double normalized = x * y * p / mean_;
        return r_ == 1 ? mu_ * normalized : mu_ * normalized * normalized;
    }

private:
    double alpha_ = 1.0, beta_ = 1.0, inv_xi2_ = 1.0, mu_ = 1.0, mean_ = 1.0;
    int r_ = 1;
};

/// Nakagami-m SNR: Gamma(m, γ̄/m).
class NakagamiSampler {
public:
    explicit NakagamiSampler(const channels::NakagamiLink& link) : m_(link.m), scale_(link.avg_snr / link.m) {
        link.validate();
    }

    template <class Engine>
    double operator()(Engine& e) const {
        std::gamma_distribution<double> d(m_, scale_);
        return d(e);
    }

private:
    double m_, scale_;
};

/// Sampler for either optical link family.
class OpticalSampler {
public:
    explicit OpticalSampler(const secrecy::OpticalLink& link)
        : impl_(std::visit(
              [](const auto& l) -> Impl {
                  if constexpr (std::is_same_v<std::decay_t<decltype(l)>, channels::MalagaLink>)
                      return MalagaSampler(l);
                  else
                      return GammaGammaSampler(l);
              },
              link)) {}

    template <class Engine>
    double operator()(Engine& e) const {
        return std::visit([&e](const auto& s) { return s(e); }, impl_);
    }

private:
    using Impl = std::variant<MalagaSampler, GammaGammaSampler>;
    Impl impl_;
};

template <class Engine>
double sample_malaga_snr(const channels::MalagaLink& link, Engine& e) {
    return MalagaSampler(link)(e);
}

template <class Engine>
double sample_nakagami_snr(const channels::NakagamiLink& link, Engine& e) {
    return NakagamiSampler(link)(e);
}

}  // namespace fsorf::mc
