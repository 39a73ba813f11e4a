// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fsorf/error.hpp"
#include "fsorf/specfun/contour.hpp"

namespace fsorf::specfun {

/// Parameters of G^{m,n}_{p,q}[x | a_1..a_p ; b_1..b_q].
///
/// Kernel convention: Π_{j≤m}Γ(b_j+s) Π_{j≤n}Γ(1-a_j-s) / (Π_{j>m}Γ(1-b_j-s) Π_{j>n}Γ(a_j+s)),
/// integrated against x^{-s}.
class MeijerGSpec {
public:
    MeijerGSpec(std::size_t m, std::size_t n, std::vector<double> a, std::vector<double> b)
        : m_(m), n_(n), a_(std::move(a)), b_(std::move(b)) {
        require(m_ <= b_.size(), "MeijerGSpec: m must not exceed q");
        require(n_ <= a_.size(), "MeijerGSpec: n must not exceed p");
        double left = -std::numeric_limits<double>::infinity();
        double right = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < m_; ++j) left = std::max(left, -b_[j]);
        for (std::size_t j = 0; j < n_; ++j) right = std::min(right, 1.0 - a_[j]);
        if (!(left < right))
            throw contour_error("MeijerGSpec: poles of Γ(b_j+s) and Γ(1-a_j-s) cannot be separated");
    }

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t p() const noexcept { return a_.size(); }
    std::size_t q() const noexcept { return b_.size(); }
    const std::vector<double>& a() const noexcept { return a_; }
    const std::vector<double>& b() const noexcept { return b_; }

    std::vector<GammaFactor> kernel() const {
        std::vector<GammaFactor> k;
        k.reserve(a_.size() + b_.size());
        for (std::size_t j = 0; j < b_.size(); ++j)
            k.push_back(j < m_ ? GammaFactor{b_[j], 1.0, 0.0, true} : GammaFactor{1.0 - b_[j], -1.0, 0.0, false});
        for (std::size_t j = 0; j < a_.size(); ++j)
            k.push_back(j < n_ ? GammaFactor{1.0 - a_[j], -1.0, 0.0, true} : GammaFactor{a_[j], 1.0, 0.0, false});
        return k;
    }

private:
    std::size_t m_, n_;
    std::vector<double> a_, b_;
};

inline Evaluation meijer_g_eval(const MeijerGSpec& spec, double x, const ContourConfig& cfg = {}) {
    require(x > 0.0, "meijer_g: argument must be positive");
    const auto k = spec.kernel();
    return mellin_barnes_line(k, x, cfg);
}

inline double meijer_g(const MeijerGSpec& spec, double x, const ContourConfig& cfg = {}) {
    return meijer_g_eval(spec, x, cfg).value;
}

/// Leading large-argument behaviour of G^{m,n}_{p,q}[x] (n ≥ 1), one simple-pole residue per a_k, k ≤ n:
///
///   Σ_k Π_{l≤n, l≠k}Γ(a_k-a_l) Π_{l≤m}Γ(1+b_l-a_k) / (Π_{l>n}Γ(1+a_l-a_k) Π_{l>m}Γ(a_k-b_l)) x^{a_k-1}.
///
/// A numerator Γ at a pole means the expansion has higher-order poles and is rejected.
inline double meijer_g_large_argument(const MeijerGSpec& spec, double x) {
    require(x > 0.0, "meijer_g_large_argument: argument must be positive");
    require(spec.n() >= 1, "meijer_g_large_argument: needs n >= 1");
    const auto& a = spec.a();
    const auto& b = spec.b();
    const std::size_t m = spec.m(), n = spec.n();
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double log_mag = (a[k] - 1.0) * std::log(x);
        double sign = 1.0;
        bool vanishes = false;
        auto accumulate = [&](double arg, bool numerator) {
            const auto lg = try_log_gamma(complex{arg});
            if (!lg) {
                if (numerator)
                    throw degenerate_expansion_error("meijer_g_large_argument: parameter differences give Γ(0)");
                vanishes = true;
                return;
            }
            log_mag += numerator ? lg->real() : -lg->real();
            if (std::cos(lg->imag()) < 0.0) sign = -sign;
        };
        for (std::size_t l = 0; l < n; ++l)
            if (l != k) accumulate(a[k] - a[l], true);
        for (std::size_t l = 0; l < m; ++l) accumulate(1.0 + b[l] - a[k], true);
        for (std::size_t l = n; l < a.size(); ++l) accumulate(1.0 + a[l] - a[k], false);
        for (std::size_t l = m; l < b.size(); ++l) accumulate(a[k] - b[l], false);
        if (!vanishes) total += sign * std::exp(log_mag);
    }
    return total;
}

}  // namespace fsorf::specfun
