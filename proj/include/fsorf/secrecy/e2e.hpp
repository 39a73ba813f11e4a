// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

#include "fsorf/secrecy/scenario.hpp"

namespace fsorf::secrecy {

/// Pr[γ_eq > γ] for γ_eq = min(γ_SR, γ_RD), built from the Nakagami series and the G^{3r+1,0} CCDF.
inline double e2e_ccdf(const SecrecyScenario& s, double gamma) {
    require(gamma >= 0.0, "e2e_ccdf: gamma must be non-negative");
    return channels::optical_snr_ccdf(optical_model(s.sr), gamma) * channels::nakagami_snr_ccdf(s.rd, gamma);
}

/// F_eq(γ) = 1 - Pr[γ_SR > γ] Pr[γ_RD > γ].
inline double e2e_cdf(const SecrecyScenario& s, double gamma) {
    if (gamma == 0.0) return 0.0;
    return 1.0 - e2e_ccdf(s, gamma);
}

}  // namespace fsorf::secrecy
