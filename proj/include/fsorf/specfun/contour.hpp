// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "fsorf/error.hpp"
#include "fsorf/specfun/log_gamma.hpp"

namespace fsorf::specfun {

/// Quadrature controls for Mellin–Barnes line integrals.
struct ContourConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    /// Maximum number of integrand samples (per level for the double integral).
    std::size_t node_budget = std::size_t{1} << 18;
    /// Coarsest trapezoid step along the imaginary direction.
    double initial_step = 0.5;
    /// Fixed truncation half-length; 0 selects it from the integrand decay.
    double truncation_half_length = 0.0;
    /// Preferred distance between the contour and the nearest pole.
    double pole_margin = 0.25;

    static ContourConfig univariate() { return {}; }
    static ContourConfig bivariate() {
        ContourConfig c;
        c.abs_tol = 1e-8;
        c.rel_tol = 1e-6;
        c.initial_step = 0.25;
        c.node_budget = std::size_t{1} << 24;
        return c;
    }

    void validate() const {
        require(abs_tol > 0.0 && rel_tol > 0.0, "ContourConfig: tolerances must be positive");
        require(node_budget >= 64, "ContourConfig: node budget must be at least 64");
        require(initial_step > 0.0, "ContourConfig: initial step must be positive");
        require(truncation_half_length >= 0.0, "ContourConfig: truncation half-length must be >= 0");
        require(pole_margin > 0.0, "ContourConfig: pole margin must be positive");
    }
};

/// Result of a contour quadrature.
struct Evaluation {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t nodes = 0;
    double abscissa_s = 0.0;
    double abscissa_t = 0.0;
};

/// One factor Γ(offset + slope_s·s + slope_t·t)^{±1} of a Mellin–Barnes kernel.
struct GammaFactor {
    double offset = 0.0;
    double slope_s = 0.0;
    double slope_t = 0.0;
    bool numerator = true;
};

namespace detail {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Sum of ±lnΓ over the factors. A denominator pole contributes 1/Γ = 0 (log = -inf).
inline complex log_kernel(std::span<const GammaFactor> factors, complex s, complex t) {
    complex acc = 0.0;
    for (const auto& f : factors) {
        const complex arg = f.offset + f.slope_s * s + f.slope_t * t;
        const auto lg = try_log_gamma(arg);
        if (!lg) {
            if (f.numerator) throw pole_error("Mellin-Barnes kernel: contour passes through a numerator pole");
            return {neg_inf, 0.0};
        }
        acc += f.numerator ? *lg : -*lg;
    }
    return acc;
}

// Exponential decay rate along the imaginary direction: |kernel| ~ exp(-π/2 · rate · |u|).
inline double decay_rate_s(std::span<const GammaFactor> factors) {
    double rate = 0.0;
    for (const auto& f : factors) rate += (f.numerator ? 1.0 : -1.0) * std::abs(f.slope_s);
    return rate;
}

inline double golden_min(auto&& fn, double lo, double hi, int iterations = 80) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    for (int i = 0; i < iterations && (b - a) > 1e-10 * (1.0 + std::abs(a)); ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = fn(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = fn(x2);
        }
    }
    return 0.5 * (a + b);
}

struct Interval {
    double lo;
    double hi;
};

// Open interval of abscissae c for which every numerator argument has positive real part.
inline Interval separating_interval(std::span<const GammaFactor> factors) {
    Interval iv{neg_inf, std::numeric_limits<double>::infinity()};
    for (const auto& f : factors) {
        if (!f.numerator || f.slope_s == 0.0) continue;
        const double edge = -f.offset / f.slope_s;
        if (f.slope_s > 0.0) iv.lo = std::max(iv.lo, edge);
        else iv.hi = std::min(iv.hi, edge);
    }
    return iv;
}

inline double tolerance_scaled(const ContourConfig& cfg, double sum, double log_scale) {
    const double abs_scaled = cfg.abs_tol * std::exp(-log_scale);
    return std::max(abs_scaled, cfg.rel_tol * std::abs(sum));
}

}  // namespace detail

/// Univariate Mellin–Barnes integral (1/2πi)∫ K(s) x^{-s} ds along a vertical line.
///
/// The abscissa is placed inside the separating strip at the real saddle of
/// |K(c)| x^{-c}, kept at least `pole_margin` (or a quarter of the strip width)
/// from the nearest pole. The line integral is a trapezoid sum whose step is
/// halved until two successive sums agree within tolerance.
inline Evaluation mellin_barnes_line(std::span<const GammaFactor> factors, double x, const ContourConfig& cfg) {
    cfg.validate();
    require(x > 0.0 && std::isfinite(x), "mellin_barnes_line: argument must be positive and finite");
    if (detail::decay_rate_s(factors) <= 0.0)
        throw convergence_error("mellin_barnes_line: kernel does not decay along vertical lines");

    const auto strip = detail::separating_interval(factors);
    if (!(strip.lo < strip.hi))
        throw contour_error("mellin_barnes_line: pole families are not separable by a vertical contour");

    const double log_x = std::log(x);
    const double width = strip.hi - strip.lo;
    const double margin = std::isfinite(width) ? std::min(cfg.pole_margin, 0.25 * width) : cfg.pole_margin;
    constexpr double search_span = 64.0;
    double lo = strip.lo + margin, hi = strip.hi - margin;
    if (!std::isfinite(lo) && !std::isfinite(hi)) {
        lo = -search_span;
        hi = search_span;
    } else if (!std::isfinite(lo)) {
        lo = hi - search_span;
    } else if (!std::isfinite(hi)) {
        hi = lo + search_span;
    }

    auto phase = [&](double c) {
        const double p = detail::log_kernel(factors, c, 0.0).real() - c * log_x;
        return std::isfinite(p) ? p : std::numeric_limits<double>::infinity();
    };
    // Coarse scan locates the basin, golden section refines it.
    constexpr int scan_points = 33;
    double best_c = lo, best_phi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < scan_points; ++i) {
        const double c = lo + (hi - lo) * i / (scan_points - 1);
        const double p = phase(c);
        if (p < best_phi) {
            best_phi = p;
            best_c = c;
        }
    }
    const double cell = (hi - lo) / (scan_points - 1);
    const double c = detail::golden_min(phase, std::max(lo, best_c - cell), std::min(hi, best_c + cell));
    const double log_scale = phase(c);

    auto log_integrand = [&](double u) {
        const complex s{c, u};
        return detail::log_kernel(factors, s, 0.0) - s * log_x - log_scale;
    };
    auto to_value = [](complex lk) { return lk.real() < -745.0 ? 0.0 : std::real(std::exp(lk)); };
    auto integrand = [&](double u) { return to_value(log_integrand(u)); };

    // Truncation: walk outward until the scaled integrand stays below the tail threshold.
    double h = cfg.initial_step;
    std::vector<double> samples{integrand(0.0)};
    double half_length = cfg.truncation_half_length;
    if (half_length == 0.0) {
        const double log_floor = std::log(std::min(1e-20, cfg.rel_tol * 1e-12));
        int quiet = 0;
        double previous = 0.0;
        for (std::size_t k = 1;; ++k) {
            if (k > cfg.node_budget) throw convergence_error("mellin_barnes_line: truncation exceeded node budget");
            const double u = k * h;
            const complex lk = log_integrand(u);
            const double m = lk.real();
            samples.push_back(to_value(lk));
            quiet = (m < log_floor && m <= previous) ? quiet + 1 : 0;
            previous = m;
            if (quiet >= 4) {
                half_length = u;
                break;
            }
        }
    } else {
        const auto n = static_cast<std::size_t>(std::ceil(half_length / h));
        for (std::size_t k = 1; k <= n; ++k) samples.push_back(integrand(k * h));
    }

    auto trapezoid = [&](const std::vector<double>& v, double step) {
        double sum = 0.5 * v[0];
        for (std::size_t k = 1; k < v.size(); ++k) sum += v[k];
        return sum * step / std::numbers::pi;
    };

    double estimate = trapezoid(samples, h);
    std::size_t nodes = samples.size();
    for (int level = 0;; ++level) {
        const std::size_t next_size = 2 * (samples.size() - 1) + 1;
        nodes += samples.size() - 1;
        if (nodes > cfg.node_budget)
            throw convergence_error("mellin_barnes_line: tolerance not met within node budget");
        std::vector<double> refined(next_size);
        const double half = 0.5 * h;
        for (std::size_t k = 0; k < samples.size(); ++k) refined[2 * k] = samples[k];
        for (std::size_t k = 1; k < next_size; k += 2) refined[k] = integrand(k * half);
        const double next = trapezoid(refined, half);
        const double diff = std::abs(next - estimate);
        samples = std::move(refined);
        h = half;
        estimate = next;
        if (level >= 1 && diff <= detail::tolerance_scaled(cfg, estimate, log_scale)) {
            const double scale = std::exp(log_scale);
            return {estimate * scale, diff * scale, nodes, c, 0.0};
        }
    }
}


namespace detail {

struct PlanePoint {
    double s;
    double t;
};

inline bool plane_feasible(std::span<const GammaFactor> factors, double cs, double ct, double margin) {
    for (const auto& f : factors) {
        if (!f.numerator) continue;
        const double re = f.offset + f.slope_s * cs + f.slope_t * ct;
        if (f.slope_s == 0.0 && f.slope_t == 0.0) {
            if (re <= 0.0 && re == std::floor(re)) return false;
            continue;
        }
        if (re < margin) return false;
    }
    return true;
}

// Bounding box for the abscissae implied by the single-variable constraints.
inline void plane_box(std::span<const GammaFactor> factors, double& s_lo, double& s_hi, double& t_lo, double& t_hi) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    s_lo = -inf, s_hi = inf, t_lo = -inf, t_hi = inf;
    for (const auto& f : factors) {
        if (!f.numerator) continue;
        if (f.slope_t == 0.0 && f.slope_s != 0.0) {
            const double e = -f.offset / f.slope_s;
            if (f.slope_s > 0.0) s_lo = std::max(s_lo, e);
            else s_hi = std::min(s_hi, e);
        } else if (f.slope_s == 0.0 && f.slope_t != 0.0) {
            const double e = -f.offset / f.slope_t;
            if (f.slope_t > 0.0) t_lo = std::max(t_lo, e);
            else t_hi = std::min(t_hi, e);
        }
    }
    // Joint factors Γ(c - σs - τt) cap each variable once the other is at its lower edge.
    for (const auto& f : factors) {
        if (!f.numerator || f.slope_s >= 0.0 || f.slope_t >= 0.0) continue;
        if (std::isfinite(s_lo)) t_hi = std::min(t_hi, (f.offset + f.slope_s * s_lo) / -f.slope_t);
        if (std::isfinite(t_lo)) s_hi = std::min(s_hi, (f.offset + f.slope_t * t_lo) / -f.slope_s);
    }
    constexpr double span = 16.0;
    auto close = [](double& lo, double& hi) {
        if (!std::isfinite(lo) && !std::isfinite(hi)) {
            lo = -span;
            hi = span;
        } else if (!std::isfinite(lo)) {
            lo = hi - span;
        } else if (!std::isfinite(hi)) {
            hi = lo + span;
        }
    };
    close(s_lo, s_hi);
    close(t_lo, t_hi);
}

// Real saddle of |K(s,t)| x^{-s} y^{-t} over the separating region, kept `margin` away from poles.
// The margin is halved until a feasible point exists; an empty region is a separation failure.
inline PlanePoint plane_abscissae(std::span<const GammaFactor> factors, double log_x, double log_y, double margin) {
    double s_lo, s_hi, t_lo, t_hi;
    plane_box(factors, s_lo, s_hi, t_lo, t_hi);
    if (!(s_lo < s_hi) || !(t_lo < t_hi))
        throw contour_error("mellin_barnes_plane: pole families are not separable in one of the variables");

    auto phase = [&](double cs, double ct) {
        const double p = log_kernel(factors, complex{cs}, complex{ct}).real() - cs * log_x - ct * log_y;
        return std::isfinite(p) ? p : std::numeric_limits<double>::infinity();
    };

    constexpr int grid = 49;
    for (double mu = margin; mu >= 1e-4; mu *= 0.5) {
        bool found = false;
        PlanePoint best{};
        double best_phi = std::numeric_limits<double>::infinity();
        for (int i = 1; i < grid - 1; ++i) {
            for (int j = 1; j < grid - 1; ++j) {
                const double cs = s_lo + (s_hi - s_lo) * i / (grid - 1);
                const double ct = t_lo + (t_hi - t_lo) * j / (grid - 1);
                if (!plane_feasible(factors, cs, ct, mu)) continue;
                const double p = phase(cs, ct);
                if (!found || p < best_phi) {
                    found = true;
                    best_phi = p;
                    best = {cs, ct};
                }
            }
        }
        if (!found) continue;
        // Compass search refinement inside the feasible region.
        double step = std::max(s_hi - s_lo, t_hi - t_lo) / (grid - 1);
        while (step > 1e-6) {
            bool moved = false;
            const PlanePoint moves[4] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
            for (const auto& mv : moves) {
                const PlanePoint trial{best.s + mv.s, best.t + mv.t};
                if (!plane_feasible(factors, trial.s, trial.t, mu)) continue;
                const double p = phase(trial.s, trial.t);
                if (p < best_phi) {
                    best_phi = p;
                    best = trial;
                    moved = true;
                }
            }
            if (!moved) step *= 0.5;
        }
        return best;
    }
    throw contour_error("mellin_barnes_plane: no pair of vertical contours separates the pole families");
}

}  // namespace detail

/// Double Mellin–Barnes integral (1/2πi)^2 ∫∫ K(s,t) x^{-s} y^{-t} ds dt.
///
/// Tensor-product trapezoid on a square grid with a common step, using the
/// conjugate symmetry K(conj s, conj t) = conj K(s, t) to sum one half-plane.
/// Factors depending on a single variable and joint factors with equal slopes
/// (functions of s+t) are tabulated once per level, so a level costs O(N) gamma
/// evaluations and O(N^2) products.
inline Evaluation mellin_barnes_plane(std::span<const GammaFactor> factors, double x, double y,
                                      const ContourConfig& cfg) {
    cfg.validate();
    require(x > 0.0 && std::isfinite(x) && y > 0.0 && std::isfinite(y),
                    "mellin_barnes_plane: arguments must be positive and finite");

    const double log_x = std::log(x), log_y = std::log(y);
    const auto [cs, ct] = detail::plane_abscissae(factors, log_x, log_y, cfg.pole_margin);

    std::vector<GammaFactor> only_s, only_t, diagonal, general;
    for (const auto& f : factors) {
        if (f.slope_t == 0.0) only_s.push_back(f);
        else if (f.slope_s == 0.0) only_t.push_back(f);
        else if (f.slope_s == f.slope_t) diagonal.push_back(f);
        else general.push_back(f);
    }
    // Diagonal factors Γ(c + κ(s+t)): re-express as one-variable factors of w = s + t.
    for (auto& f : diagonal) f.slope_t = 0.0;

    const double log_scale = detail::log_kernel(factors, complex{cs}, complex{ct}).real() - cs * log_x - ct * log_y;
    if (!std::isfinite(log_scale))
        throw convergence_error("mellin_barnes_plane: kernel vanishes at the chosen abscissae");

    auto log_a = [&](double u) {
        const complex s{cs, u};
        return detail::log_kernel(only_s, s, 0.0) - s * log_x;
    };
    auto log_b = [&](double v) {
        const complex t{ct, v};
        return detail::log_kernel(only_t, 0.0, t) - t * log_y;
    };
    auto log_c = [&](double w) { return detail::log_kernel(diagonal, complex{cs + ct, w}, 0.0); };
    auto log_g = [&](double u, double v) {
        return general.empty() ? complex{} : detail::log_kernel(general, complex{cs, u}, complex{ct, v});
    };
    auto log_f = [&](double u, double v) { return log_a(u) + log_b(v) + log_c(u + v) + log_g(u, v) - log_scale; };

    const double log_floor = std::log(std::min(1e-20, cfg.rel_tol * 1e-12));
    double h0 = cfg.initial_step;
    double half_length = cfg.truncation_half_length;
    if (half_length == 0.0) {
        int quiet = 0;
        for (long n = 1;; ++n) {
            if (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) > cfg.node_budget)
                throw convergence_error("mellin_barnes_plane: truncation exceeded node budget");
            double edge = detail::neg_inf;
            for (long j = 0; j <= n; ++j) {
                edge = std::max(edge, log_f(n * h0, j * h0).real());
                edge = std::max(edge, log_f(-n * h0, j * h0).real());
            }
            for (long i = -n; i <= n; ++i) edge = std::max(edge, log_f(i * h0, n * h0).real());
            quiet = edge < log_floor ? quiet + 1 : 0;
            if (quiet >= 3) {
                half_length = n * h0;
                break;
            }
        }
    }

    auto level_sum = [&](double h, std::size_t& nodes) {
        const long n = static_cast<long>(std::ceil(half_length / h));
        const std::size_t width = static_cast<std::size_t>(2 * n + 1);
        nodes = width * static_cast<std::size_t>(n + 1);
        if (nodes > cfg.node_budget)
            throw convergence_error("mellin_barnes_plane: tolerance not met within node budget");
        std::vector<complex> a(width), c(static_cast<std::size_t>(3 * n + 1));
        std::vector<complex> b(static_cast<std::size_t>(n + 1));
        for (long i = -n; i <= n; ++i) a[i + n] = log_a(i * h);
        for (long j = 0; j <= n; ++j) b[j] = log_b(j * h);
        for (long k = -n; k <= 2 * n; ++k) c[k + n] = log_c(k * h);
        complex total = 0.0;
        for (long j = 0; j <= n; ++j) {
            complex row = 0.0;
            const double v = j * h;
            for (long i = -n; i <= n; ++i) {
                complex lf = a[i + n] + b[j] + c[i + j + n] - log_scale;
                if (!general.empty()) lf += log_g(i * h, v);
                if (lf.real() < -745.0) continue;
                row += std::exp(lf);
            }
            total += (j == 0 ? 0.5 : 1.0) * row;
        }
        return 2.0 * total.real() * h * h / (4.0 * std::numbers::pi * std::numbers::pi);
    };

    std::size_t nodes = 0, level_nodes = 0;
    double h = h0;
    double estimate = level_sum(h, level_nodes);
    nodes += level_nodes;
    for (int level = 0;; ++level) {
        h *= 0.5;
        const double next = level_sum(h, level_nodes);
        nodes += level_nodes;
        const double diff = std::abs(next - estimate);
        estimate = next;
        if (!std::isfinite(estimate)) throw convergence_error("mellin_barnes_plane: non-finite quadrature sum");
        if (level >= 1 && diff <= detail::tolerance_scaled(cfg, estimate, log_scale)) {
            const double scale = std::exp(log_scale);
            return {estimate * scale, diff * scale, nodes, cs, ct};
        }
    }
}

}  // namespace fsorf::specfun
