// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "fsorf/error.hpp"
#include "fsorf/specfun/contour.hpp"
#include "fsorf/specfun/meijer_g.hpp"

namespace fsorf::specfun {

/// A Fox H parameter pair (value, scale), e.g. (ξ², r).
struct HParam {
    double value = 0.0;
    double scale = 1.0;
};

/// Expands a parameter list with the unit-scale convention (K, [1]_k).
inline std::vector<HParam> with_unit_scales(std::span<const double> values) {
    std::vector<HParam> out;
    out.reserve(values.size());
    for (double v : values) out.push_back({v, 1.0});
    return out;
}

inline std::vector<HParam> with_scale(std::span<const double> values, double scale) {
    std::vector<HParam> out;
    out.reserve(values.size());
    for (double v : values) out.push_back({v, scale});
    return out;
}

/// Parameters of H^{m,n}_{p,q}[x | (a_j, A_j) ; (b_j, B_j)].
///
/// Kernel: Π_{j≤m}Γ(b_j+B_j s) Π_{j≤n}Γ(1-a_j-A_j s) / (Π_{j>m}Γ(1-b_j-B_j s) Π_{j>n}Γ(a_j+A_j s)).
class FoxHSpec {
public:
    FoxHSpec(std::size_t m, std::size_t n, std::vector<HParam> a, std::vector<HParam> b)
        : m_(m), n_(n), a_(std::move(a)), b_(std::move(b)) {
        require(m_ <= b_.size(), "FoxHSpec: m must not exceed q");
        require(n_ <= a_.size(), "FoxHSpec: n must not exceed p");
        for (const auto& p : a_) require(p.scale > 0.0, "FoxHSpec: scale coefficients must be positive");
        for (const auto& p : b_) require(p.scale > 0.0, "FoxHSpec: scale coefficients must be positive");
        double left = -std::numeric_limits<double>::infinity();
        double right = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < m_; ++j) left = std::max(left, -b_[j].value / b_[j].scale);
        for (std::size_t j = 0; j < n_; ++j) right = std::min(right, (1.0 - a_[j].value) / a_[j].scale);
        if (!(left < right))
            throw contour_error("FoxHSpec: left and right pole families cannot be separated");
    }

    static FoxHSpec from_meijer(const MeijerGSpec& g) {
        return FoxHSpec(g.m(), g.n(), with_unit_scales(g.a()), with_unit_scales(g.b()));
    }

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t p() const noexcept { return a_.size(); }
    std::size_t q() const noexcept { return b_.size(); }
    const std::vector<HParam>& a() const noexcept { return a_; }
    const std::vector<HParam>& b() const noexcept { return b_; }

    /// Kernel in the variable s; `as_t` places it on the second variable of a double integral.
    std::vector<GammaFactor> kernel(bool as_t = false) const {
        std::vector<GammaFactor> k;
        k.reserve(a_.size() + b_.size());
        auto factor = [as_t](double offset, double slope, bool num) {
            return as_t ? GammaFactor{offset, 0.0, slope, num} : GammaFactor{offset, slope, 0.0, num};
        };
        for (std::size_t j = 0; j < b_.size(); ++j)
            k.push_back(j < m_ ? factor(b_[j].value, b_[j].scale, true)
                               : factor(1.0 - b_[j].value, -b_[j].scale, false));
        for (std::size_t j = 0; j < a_.size(); ++j)
            k.push_back(j < n_ ? factor(1.0 - a_[j].value, -a_[j].scale, true)
                               : factor(a_[j].value, a_[j].scale, false));
        return k;
    }

private:
    std::size_t m_, n_;
    std::vector<HParam> a_, b_;
};

inline Evaluation fox_h_eval(const FoxHSpec& spec, double x, const ContourConfig& cfg = {}) {
    require(x > 0.0, "fox_h: argument must be positive");
    const auto k = spec.kernel();
    return mellin_barnes_line(k, x, cfg);
}

inline double fox_h(const FoxHSpec& spec, double x, const ContourConfig& cfg = {}) {
    return fox_h_eval(spec, x, cfg).value;
}

/// Small-argument expansion from the residues of Γ(b_j + B_j s), j ≤ m, at s = -(b_j + l)/B_j for
/// l < `orders`:
///   Σ (-1)^l/(l! B_j) [remaining kernel at s] x^{(b_j + l)/B_j}.
/// Assumes simple poles; a numerator Γ at a pole throws degenerate_expansion_error.
inline double fox_h_small_argument(const FoxHSpec& spec, double x, int orders = 1) {
    require(x > 0.0, "fox_h_small_argument: argument must be positive");
    require(orders >= 1, "fox_h_small_argument: needs at least one order");
    const auto kernel = spec.kernel();
    double total = 0.0;
    for (std::size_t j = 0; j < spec.m(); ++j) {
        const auto [bj, Bj] = spec.b()[j];
        for (int l = 0; l < orders; ++l) {
            const double s = -(bj + l) / Bj;
            double log_mag = -s * std::log(x) - std::lgamma(l + 1.0) - std::log(Bj);
            double sign = l % 2 ? -1.0 : 1.0;
            bool vanishes = false;
            for (std::size_t k = 0; k < kernel.size() && !vanishes; ++k) {
                if (k == j) continue;
                const auto& f = kernel[k];
                const auto lg = try_log_gamma(complex{f.offset + f.slope_s * s});
                if (!lg) {
                    if (f.numerator)
                        throw degenerate_expansion_error("fox_h_small_argument: coincident poles give Γ(0)");
                    vanishes = true;
                    break;
                }
                log_mag += f.numerator ? lg->real() : -lg->real();
                if (std::cos(lg->imag()) < 0.0) sign = -sign;
            }
            if (!vanishes) total += sign * std::exp(log_mag);
        }
    }
    return total;
}

}  // namespace fsorf::specfun
