// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "fsorf/error.hpp"
#include "fsorf/mc/random.hpp"
#include "fsorf/mc/samplers.hpp"
#include "fsorf/secrecy/quadrature.hpp"
#include "fsorf/secrecy/scenario.hpp"

namespace fsorf::mc {

struct SimConfig {
    std::uint64_t sample_count = 1'000'000;
    std::uint64_t seed = 1;
    bool antithetic = true;
    /// Worker threads; 0 uses the hardware concurrency. Results do not depend on this value.
    unsigned threads = 0;

    static constexpr std::uint64_t minimum_samples = 10'000;

    void validate() const {
        require(sample_count >= minimum_samples, "SimConfig: sample_count must be at least 10^4");
    }
};

/// Sample mean with its standard error. With antithetic sampling the error is computed from the
/// n/2 pair averages, which are independent.
struct EstimateWithError {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
};

/// Both outage events on the same sample paths.
struct OutageSimulation {
    /// Pr{C_s ≤ R_s}, the defining event.
    EstimateWithError exact;
    /// Pr{γ_eq ≤ Θγ_SE} (single) or the per-hop product bound (dual), the event of the closed forms.
    EstimateWithError bound;
};

namespace detail {

inline constexpr std::uint64_t chunk_count = 256;

struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t count = 0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++count;
    }
};

struct ChunkResult {
    Moments exact, bound;
};

inline Moments pairwise_merge(std::vector<Moments> v) {
    while (v.size() > 1) {
        std::vector<Moments> next;
        for (std::size_t i = 0; i + 1 < v.size(); i += 2)
            next.push_back({v[i].sum + v[i + 1].sum, v[i].sum_sq + v[i + 1].sum_sq, v[i].count + v[i + 1].count});
        if (v.size() % 2) next.push_back(v.back());
        v = std::move(next);
    }
    return v.empty() ? Moments{} : v.front();
}

inline EstimateWithError finish(const Moments& m, std::uint64_t samples) {
    const double n = static_cast<double>(m.count);
    const double mean = m.sum / n;
    const double var = std::max(0.0, (m.sum_sq - n * mean * mean) / (n - 1.0));
    return {mean, std::sqrt(var / n), samples};
}

// Runs `path(engine, exact, bound)` over fixed substreams (seed, chunk) and merges by chunk index.
template <class Path>
OutageSimulation simulate(const SimConfig& cfg, const Path& path) {
    cfg.validate();
    const std::uint64_t units = cfg.antithetic ? (cfg.sample_count + 1) / 2 : cfg.sample_count;
    std::vector<ChunkResult> results(chunk_count);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c = next++; c < chunk_count; c = next++) {
            const std::uint64_t begin = units * c / chunk_count, end = units * (c + 1) / chunk_count;
            CounterEngine engine(cfg.seed, c);
            Reflected<CounterEngine> mirror(engine);
            ChunkResult out;
            for (std::uint64_t i = begin; i < end; ++i) {
                double e1 = 0.0, b1 = 0.0;
                path(engine, e1, b1);
                if (cfg.antithetic) {
                    double e2 = 0.0, b2 = 0.0;
                    path(mirror, e2, b2);
                    out.exact.add(0.5 * (e1 + e2));
                    out.bound.add(0.5 * (b1 + b2));
                } else {
                    out.exact.add(e1);
                    out.bound.add(b1);
                }
            }
            results[c] = out;
        }
    };
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunk_count));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<Moments> exact, bound;
    for (const auto& r : results) {
        exact.push_back(r.exact);
        bound.push_back(r.bound);
    }
    const std::uint64_t n = cfg.antithetic ? 2 * units : units;
    return {finish(pairwise_merge(exact), n), finish(pairwise_merge(bound), n)};
}

}  // namespace detail

/// Empirical secrecy outage: exact event {ln((1+γ_eq)/(1+γ_E)) ≤ R_s} and the bound event
/// {γ_eq ≤ Θγ_E}; dual mode uses per-hop capacities and min(C_SR, C_RD) ≤ R_s.
inline OutageSimulation estimate_sop(const secrecy::SecrecyScenario& s, const SimConfig& cfg,
                                     secrecy::Topology topology) {
    s.validate();
    const OpticalSampler sr(s.sr), se(s.se1);
    const NakagamiSampler rd(s.rd);
    const double theta = s.theta();
    if (topology == secrecy::Topology::single) {
        return detail::simulate(cfg, [&](auto& e, double& exact, double& bound) {
            const double g_eq = std::min(sr(e), rd(e));
            const double g_e = se(e);
            exact = g_eq <= theta * g_e + theta - 1.0 ? 1.0 : 0.0;
            bound = g_eq <= theta * g_e ? 1.0 : 0.0;
        });
    }
    require(s.dual(), "estimate_sop: dual topology needs the R-E2 link");
    const NakagamiSampler re(*s.re2);
    return detail::simulate(cfg, [&](auto& e, double& exact, double& bound) {
        const double g_sr = sr(e), g_se = se(e), g_rd = rd(e), g_re = re(e);
        exact = (g_sr <= theta * g_se + theta - 1.0 || g_rd <= theta * g_re + theta - 1.0) ? 1.0 : 0.0;
        bound = (g_sr <= theta * g_se || g_rd <= theta * g_re) ? 1.0 : 0.0;
    });
}

/// Empirical Pr{C_s > 0}; the complement of estimate_sop at R_s = 0 on the same paths.
inline EstimateWithError estimate_spsc(const secrecy::SecrecyScenario& s, const SimConfig& cfg,
                                       secrecy::Topology topology) {
    const auto o = estimate_sop(s.with_rate(0.0), cfg, topology);
    return {1.0 - o.exact.mean, o.exact.std_error, o.exact.n};
}

}  // namespace fsorf::mc
