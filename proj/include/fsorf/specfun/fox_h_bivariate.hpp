// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fsorf/error.hpp"
#include "fsorf/specfun/contour.hpp"
#include "fsorf/specfun/fox_h.hpp"

namespace fsorf::specfun {

/// Joint-block parameter (a; α, A) coupling both integration variables.
struct JointParam {
    double value = 0.0;
    double scale_s = 1.0;
    double scale_t = 1.0;
};

/// H-function of two variables,
///   H^{0,n1; m2,n2; m3,n3}_{p1,q1; p2,q2; p3,q3}[x, y | joint | first | second].
///
/// Kernel in (s, t), integrated against x^{-s} y^{-t}:
///   Π_{j≤n1} Γ(1 - a_j - α_j s - A_j t)
///   / (Π_{j>n1} Γ(a_j + α_j s + A_j t) Π_j Γ(1 - b_j - β_j s - B_j t))
///   × θ_first(s) × θ_second(t),
/// where θ are the univariate Fox H kernels of the first and second blocks.
class FoxHBivarSpec {
public:
    FoxHBivarSpec(std::size_t n1, std::vector<JointParam> joint_a, std::vector<JointParam> joint_b, FoxHSpec first,
                  FoxHSpec second)
        : n1_(n1),
          joint_a_(std::move(joint_a)),
          joint_b_(std::move(joint_b)),
          first_(std::move(first)),
          second_(std::move(second)) {
        require(n1_ <= joint_a_.size(), "FoxHBivarSpec: n1 must not exceed p1");
        for (const auto& j : joint_a_)
            require(j.scale_s > 0.0 && j.scale_t > 0.0, "FoxHBivarSpec: joint scales must be positive");
        for (const auto& j : joint_b_)
            require(j.scale_s > 0.0 && j.scale_t > 0.0, "FoxHBivarSpec: joint scales must be positive");
        // Separation check in both variables; throws contour_error when empty.
        const auto k = kernel();
        (void)detail::plane_abscissae(k, 0.0, 0.0, 1e-3);
    }

    std::size_t n1() const noexcept { return n1_; }
    std::size_t p1() const noexcept { return joint_a_.size(); }
    std::size_t q1() const noexcept { return joint_b_.size(); }
    const std::vector<JointParam>& joint_a() const noexcept { return joint_a_; }
    const std::vector<JointParam>& joint_b() const noexcept { return joint_b_; }
    const FoxHSpec& first() const noexcept { return first_; }
    const FoxHSpec& second() const noexcept { return second_; }
    bool separable() const noexcept { return joint_a_.empty() && joint_b_.empty(); }

    std::vector<GammaFactor> kernel() const {
        std::vector<GammaFactor> k;
        for (std::size_t j = 0; j < joint_a_.size(); ++j) {
            const auto& p = joint_a_[j];
            k.push_back(j < n1_ ? GammaFactor{1.0 - p.value, -p.scale_s, -p.scale_t, true}
                                : GammaFactor{p.value, p.scale_s, p.scale_t, false});
        }
        for (const auto& p : joint_b_) k.push_back({1.0 - p.value, -p.scale_s, -p.scale_t, false});
        for (const auto& f : first_.kernel(false)) k.push_back(f);
        for (const auto& f : second_.kernel(true)) k.push_back(f);
        return k;
    }

private:
    std::size_t n1_;
    std::vector<JointParam> joint_a_, joint_b_;
    FoxHSpec first_, second_;
};

inline Evaluation fox_h_bivariate_eval(const FoxHBivarSpec& spec, double x, double y,
                                       const ContourConfig& cfg = ContourConfig::bivariate()) {
    require(x > 0.0 && y > 0.0, "fox_h_bivariate: arguments must be positive");
    const auto k = spec.kernel();
    return mellin_barnes_plane(k, x, y, cfg);
}

inline double fox_h_bivariate(const FoxHBivarSpec& spec, double x, double y,
                              const ContourConfig& cfg = ContourConfig::bivariate()) {
    return fox_h_bivariate_eval(spec, x, y, cfg).value;
}

}  // namespace fsorf::specfun
