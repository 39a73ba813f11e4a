// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

#include "fsorf/error.hpp"

namespace fsorf::specfun {

using complex = std::complex<double>;

namespace detail {

// Godfrey's Lanczos coefficients, g = 607/128, n = 15.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_coef = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

inline bool is_nonpositive_integer(complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Valid for Re z >= 0.5.
inline complex lanczos_log_gamma(complex z) {
    const complex zm1 = z - 1.0;
    complex series = lanczos_coef[0];
    for (std::size_t k = 1; k < lanczos_coef.size(); ++k)
        series += lanczos_coef[k] / (zm1 + static_cast<double>(k));
    const complex t = zm1 + lanczos_g + 0.5;
    constexpr double half_log_two_pi = 0.91893853320467274178;
    return half_log_two_pi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace detail

/// Principal branch of log Γ(z).
///
/// Lanczos approximation for Re z >= 0.5; the left half-plane is reached with the
/// recurrence lnΓ(z) = lnΓ(z+n) - Σ Log(z+k), which keeps the branch cut on the
/// negative real axis. Throws pole_error at non-positive integers.
inline complex log_gamma(complex z) {
    if (detail::is_nonpositive_integer(z)) throw pole_error("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return detail::lanczos_log_gamma(z);
    const int shift = static_cast<int>(std::ceil(0.5 - z.real()));
    complex correction = 0.0;
    for (int k = 0; k < shift; ++k) correction += std::log(z + static_cast<double>(k));
    return detail::lanczos_log_gamma(z + static_cast<double>(shift)) - correction;
}

/// log Γ(z), or nullopt on a pole. Used where 1/Γ at a pole is simply zero.
inline std::optional<complex> try_log_gamma(complex z) {
    if (detail::is_nonpositive_integer(z)) return std::nullopt;
    return log_gamma(z);
}

}  // namespace fsorf::specfun
