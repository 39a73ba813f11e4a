// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "fsorf/cli/config.hpp"
#include "fsorf/mc/estimate.hpp"
#include "fsorf/secrecy.hpp"

namespace fsorf::cli {

inline constexpr const char* csv_header = "snr_db,metric,mode,provenance,value,error_bound";

struct Row {
    double snr_db = 0.0;
    std::string metric;
    std::string mode;
    std::string provenance;
    double value = 0.0;
    double error_bound = 0.0;
    /// Non-empty when the cell failed numerically; value and error_bound are then NaN.
    std::string note;
};

struct SweepResult {
    std::vector<Row> rows;
    std::size_t failures = 0;
};

inline std::string mode_name(secrecy::Mode m) { return m == secrecy::Mode::validated ? "validated" : "printed"; }

namespace detail {

inline bool gamma_gamma_rayleigh(const secrecy::SecrecyScenario& s) {
    return secrecy::is_gamma_gamma(s.sr) && secrecy::is_gamma_gamma(s.se1) && s.rd.m == 1;
}

inline secrecy::Estimate closed_form(const secrecy::SecrecyScenario& s, Quantity q, secrecy::Topology t,
                                     secrecy::Mode mode) {
    using namespace secrecy;
    if (t == Topology::dual) return q == Quantity::sop ? sop_dual(s, mode) : spsc_dual(s, mode);
    if (gamma_gamma_rayleigh(s)) {
        if (q == Quantity::sop) return sop_single_gg(s, mode);
        const auto e = sop_single_gg(s.with_rate(0.0), mode);
        return {1.0 - e.value, e.error_bound, e.provenance};
    }
    return q == Quantity::sop ? sop_single(s, mode) : spsc_single(s, mode);
}

inline secrecy::Estimate asymptotic(const secrecy::SecrecyScenario& s, Quantity q, secrecy::Topology t,
                                    secrecy::Mode mode) {
    using namespace secrecy;
    if (t == Topology::dual) return q == Quantity::sop ? sop_dual_asym(s, mode) : spsc_dual_asym(s, mode);
    return q == Quantity::sop ? sop_single_asym(s, mode) : spsc_single_asym(s, mode);
}

inline secrecy::Estimate quadrature(const secrecy::SecrecyScenario& s, Quantity q, secrecy::Topology t) {
    if (q == Quantity::sop) return secrecy::sop_quadrature(s, t);
    const auto e = secrecy::sop_quadrature(s.with_rate(0.0), t);
    return {1.0 - e.value, e.error_bound, e.provenance};
}

inline Row failed(double db, std::string metric, std::string mode, std::string provenance, std::string note) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {db, std::move(metric), std::move(mode), std::move(provenance), nan, nan, std::move(note)};
}

inline void evaluate_point(const SweepConfig& c, double db, std::vector<Row>& out) {
    const auto s = at_point(c, db);
    const auto t = c.topology;
    for (const auto& m : c.metrics) {
        const auto name = metric_name(m.quantity, t);
        const std::string mode = (m.method == Method::closed || m.method == Method::asym) ? mode_name(c.mode) : "oracle";
        try {
            switch (m.method) {
                case Method::closed: {
                    const auto e = closed_form(s, m.quantity, t, c.mode);
                    out.push_back({db, name, mode, std::string(secrecy::to_string(e.provenance)), e.value, e.error_bound, {}});
                    break;
                }
                case Method::asym: {
                    const auto e = asymptotic(s, m.quantity, t, c.mode);
                    out.push_back({db, name, mode, "asymptotic", e.value, e.error_bound, {}});
                    break;
                }
                case Method::quadrature: {
                    const auto e = quadrature(s, m.quantity, t);
                    out.push_back({db, name, mode, "quadrature", e.value, e.error_bound, {}});
                    break;
                }
                case Method::mc: {
                    auto cfg = c.mc;
                    cfg.threads = 1;
                    if (m.quantity == Quantity::sop) {
                        const auto o = mc::estimate_sop(s, cfg, t);
                        out.push_back({db, name, mode, "monte_carlo", o.bound.mean, 3.0 * o.bound.std_error, {}});
                        out.push_back({db, name + "_exact_event", mode, "monte_carlo", o.exact.mean,
                                       3.0 * o.exact.std_error, {}});
                    } else {
                        const auto e = mc::estimate_spsc(s, cfg, t);
                        out.push_back({db, name, mode, "monte_carlo", e.mean, 3.0 * e.std_error, {}});
                    }
                    break;
                }
            }
        } catch (const numeric_error& e) {
            const char* prov = m.method == Method::closed ? "closed_form" : m.method == Method::asym ? "asymptotic"
                               : m.method == Method::quadrature ? "quadrature" : "monte_carlo";
            out.push_back(failed(db, name, mode, prov, e.what()));
        } catch (const std::exception& e) {
            out.push_back(failed(db, name, mode, "error", e.what()));
        }
    }
}

}  // namespace detail

inline void sort_rows(std::vector<Row>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.metric, a.snr_db, a.provenance, a.mode) < std::tie(b.metric, b.snr_db, b.provenance, b.mode);
    });
}

/// Evaluates every metric at every grid point. Points run on a worker pool; rows are merged by
/// grid index and sorted by (metric, snr_db), so the output does not depend on scheduling.
inline SweepResult run_sweep(const SweepConfig& c, unsigned threads = 0) {
    c.validate();
    const auto grid = c.grid();
    std::vector<std::vector<Row>> per_point(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) detail::evaluate_point(c, grid[i], per_point[i]);
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SweepResult r;
    for (auto& v : per_point)
        for (auto& row : v) {
            if (!row.note.empty()) ++r.failures;
            r.rows.push_back(std::move(row));
        }
    sort_rows(r.rows);
    return r;
}

inline std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline void write_csv(std::ostream& os, const std::vector<Row>& rows) {
    os << csv_header << '\n';
    for (const auto& r : rows)
        os << format_number(r.snr_db) << ',' << r.metric << ',' << r.mode << ',' << r.provenance << ','
           << format_number(r.value) << ',' << format_number(r.error_bound) << '\n';
}

inline void write_csv(const std::filesystem::path& path, const std::vector<Row>& rows) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
    write_csv(os, rows);
}

}  // namespace fsorf::cli
