// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "fsorf/cli/config.hpp"
#include "fsorf/cli/sweep.hpp"
#include "fsorf/mc/estimate.hpp"
#include "fsorf/secrecy.hpp"

namespace fsorf::cli {

/// Absolute closed-form vs quadrature tolerance and the MC band (standard errors).
inline constexpr double quadrature_tolerance = 1e-4;
inline constexpr double mc_sigmas = 3.0;
/// Below this SOP the MC band is not enforced.
inline constexpr double mc_floor = 1e-3;

/// One closed-form variant compared against the quadrature oracle at one point.
struct ArbitrationRow {
    std::string item;
    std::string scenario;
    double snr_db = 0.0;
    double value = 0.0;
    double quadrature = 0.0;
    double discrepancy = 0.0;
    bool pass = false;
    std::string note;
};

/// Validated closed form against both oracles at one point.
struct OracleRow {
    double snr_db = 0.0;
    double validated = 0.0;
    double as_printed = 0.0;
    double quadrature = 0.0;
    double mc = 0.0;
    double mc_std_error = 0.0;
    double quadrature_gap = 0.0;
    double mc_sigma = 0.0;
    bool mc_checked = false;
    bool pass = false;
    std::string note;
};

struct ValidationReport {
    std::string topology;
    std::vector<OracleRow> oracle;
    std::vector<ArbitrationRow> items;
    std::size_t numeric_failures = 0;

    bool validated_pass() const {
        return !oracle.empty() && std::all_of(oracle.begin(), oracle.end(), [](const OracleRow& r) { return r.pass; });
    }
};

/// Ledger items arbitrated for a topology. Each reverts exactly one correction.
inline std::vector<std::pair<std::string, secrecy::Corrections>> ledger_items(secrecy::Topology t) {
    auto revert = [](auto member) {
        auto c = secrecy::Corrections::validated();
        c.*member = false;
        return c;
    };
    using C = secrecy::Corrections;
    if (t == secrecy::Topology::single)
        return {{"prefactor", revert(&C::prefactor)},
                {"k_structure", revert(&C::k_structure)},
                {"upsilon_form", revert(&C::upsilon_from_integrand)}};
    return {{"lambda_index", revert(&C::lambda_from_zero)},
            {"varpi_double", revert(&C::varpi_once)},
            {"upsilon_form", revert(&C::upsilon_from_integrand)}};
}

namespace detail {

inline double closed_sop(const secrecy::SecrecyScenario& s, secrecy::Topology t, const secrecy::Corrections& c) {
    return t == secrecy::Topology::single ? secrecy::sop_single(s, c).value : secrecy::sop_dual(s, c).value;
}

inline ArbitrationRow arbitrate(std::string item, std::string scenario, double db, const secrecy::SecrecyScenario& s,
                                secrecy::Topology t, const secrecy::Corrections& c, double quad) {
    ArbitrationRow r{std::move(item), std::move(scenario), db, 0.0, quad, 0.0, false, {}};
    try {
        r.value = closed_sop(s, t, c);
        r.discrepancy = std::abs(r.value - quad);
        r.pass = r.discrepancy <= quadrature_tolerance;
    } catch (const numeric_error& e) {
        r.value = r.discrepancy = std::numeric_limits<double>::quiet_NaN();
        r.note = e.what();
    }
    return r;
}

struct PointResult {
    OracleRow oracle;
    std::vector<ArbitrationRow> items;
    std::size_t failures = 0;
};

inline PointResult validate_point(const SweepConfig& c, double db, const std::vector<int>& prefactor_probes) {
    PointResult out;
    const auto s = at_point(c, db);
    const auto t = c.topology;
    auto& o = out.oracle;
    o.snr_db = db;
    try {
        o.quadrature = secrecy::sop_quadrature(s, t).value;
        auto cfg = c.mc;
        cfg.threads = 1;
        const auto sim = mc::estimate_sop(s, cfg, t).bound;
        o.mc = sim.mean;
        o.mc_std_error = sim.std_error;
        o.validated = closed_sop(s, t, secrecy::Corrections::validated());
        o.quadrature_gap = std::abs(o.validated - o.quadrature);
        o.mc_sigma = o.mc_std_error > 0.0 ? std::abs(o.validated - o.mc) / o.mc_std_error
                                          : (o.validated == o.mc ? 0.0 : std::numeric_limits<double>::infinity());
        o.mc_checked = o.validated >= mc_floor;
        o.pass = o.quadrature_gap <= quadrature_tolerance && (!o.mc_checked || o.mc_sigma <= mc_sigmas);
    } catch (const std::exception& e) {
        o.note = e.what();
        ++out.failures;
        return out;
    }
    try {
        o.as_printed = closed_sop(s, t, secrecy::Corrections::as_printed());
    } catch (const numeric_error& e) {
        o.as_printed = std::numeric_limits<double>::quiet_NaN();
    }

    const std::string base = "m_RD=" + std::to_string(s.rd.m);
    for (const auto& [name, corr] : ledger_items(t)) {
        out.items.push_back(arbitrate(name, base, db, s, t, corr, o.quadrature));
        if (name != "prefactor") continue;
        for (int m : prefactor_probes) {
            auto p = s;
            p.rd.m = m;
            try {
                const double q = secrecy::sop_quadrature(p, t).value;
                out.items.push_back(arbitrate(name, "m_RD=" + std::to_string(m), db, p, t, corr, q));
            } catch (const std::exception& e) {
                ArbitrationRow r{name, "m_RD=" + std::to_string(m), db, 0.0, 0.0, 0.0, false, e.what()};
                r.value = r.quadrature = r.discrepancy = std::numeric_limits<double>::quiet_NaN();
                out.items.push_back(r);
                ++out.failures;
            }
        }
    }
    return out;
}

}  // namespace detail

/// Runs the oracle triangle and the per-item arbitration over the sweep grid of `c` (SOP only).
/// The prefactor item is also probed at `prefactor_probes` values of m_RD, where (m-1)/Γ(m) ≠ 1.
inline ValidationReport run_validation(const SweepConfig& c, unsigned threads = 0,
                                       std::vector<int> prefactor_probes = {1, 4}) {
    c.validate();
    const auto grid = c.grid();
    std::vector<detail::PointResult> per_point(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++)
            per_point[i] = detail::validate_point(c, grid[i], prefactor_probes);
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    ValidationReport r;
    r.topology = c.topology == secrecy::Topology::single ? "single" : "dual";
    for (auto& p : per_point) {
        r.oracle.push_back(std::move(p.oracle));
        r.numeric_failures += p.failures;
        for (auto& row : p.items) r.items.push_back(std::move(row));
    }
    std::stable_sort(r.items.begin(), r.items.end(), [](const ArbitrationRow& a, const ArbitrationRow& b) {
        return std::tie(a.item, a.scenario, a.snr_db) < std::tie(b.item, b.scenario, b.snr_db);
    });
    return r;
}

namespace detail {

inline nlohmann::json number_or_null(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace detail

inline nlohmann::json summary_json(const ValidationReport& r) {
    nlohmann::json j;
    j["topology"] = r.topology;
    j["tolerance"] = {{"quadrature_abs", quadrature_tolerance}, {"mc_sigmas", mc_sigmas}, {"mc_floor", mc_floor}};
    double max_gap = 0.0, max_sigma = 0.0;
    std::size_t failed = 0;
    for (const auto& o : r.oracle) {
        max_gap = std::max(max_gap, o.quadrature_gap);
        if (o.mc_checked) max_sigma = std::max(max_sigma, o.mc_sigma);
        if (!o.pass) ++failed;
    }
    j["validated"] = {{"rows", r.oracle.size()},
                      {"failures", failed},
                      {"max_quadrature_gap", detail::number_or_null(max_gap)},
                      {"max_mc_sigma", detail::number_or_null(max_sigma)},
                      {"pass", r.validated_pass()}};
    std::map<std::string, nlohmann::json> items;
    for (const auto& a : r.items) {
        auto& it = items[a.item];
        if (it.is_null()) it = {{"rows", 0}, {"failures", 0}, {"max_discrepancy", 0.0}};
        it["rows"] = it["rows"].get<int>() + 1;
        if (!a.pass) it["failures"] = it["failures"].get<int>() + 1;
        const double d = std::isfinite(a.discrepancy) ? a.discrepancy : std::numeric_limits<double>::infinity();
        if (std::isinf(d))
            it["max_discrepancy"] = nullptr;
        else if (!it["max_discrepancy"].is_null())
            it["max_discrepancy"] = std::max(it["max_discrepancy"].get<double>(), d);
    }
    for (auto& [name, it] : items) it["as_printed_pass"] = it["failures"].get<int>() == 0;
    j["items"] = items;
    j["numeric_failures"] = r.numeric_failures;
    return j;
}

inline void write_report(std::ostream& os, const ValidationReport& r) {
    auto pf = [](bool b) { return b ? "PASS" : "FAIL"; };
    os << "Validation report (" << r.topology << " eavesdropper, SOP)\n";
    os << "tolerances: |closed - quadrature| <= " << format_number(quadrature_tolerance) << ", |closed - mc| <= "
       << format_number(mc_sigmas) << " SE where SOP >= " << format_number(mc_floor) << "\n\n";
    os << "Oracle agreement\n";
    os << "snr_db,as_printed,validated,quadrature,mc,mc_se,quadrature_gap,mc_sigma,result\n";
    for (const auto& o : r.oracle) {
        os << format_number(o.snr_db) << ',' << format_number(o.as_printed) << ',' << format_number(o.validated) << ','
           << format_number(o.quadrature) << ',' << format_number(o.mc) << ',' << format_number(o.mc_std_error) << ','
           << format_number(o.quadrature_gap) << ',' << (o.mc_checked ? format_number(o.mc_sigma) : "-") << ','
           << pf(o.pass);
        if (!o.note.empty()) os << " (" << o.note << ')';
        os << '\n';
    }
    os << "\nLedger items (one correction reverted, against quadrature)\n";
    os << "item,scenario,snr_db,value,quadrature,discrepancy,result\n";
    for (const auto& a : r.items) {
        os << a.item << ',' << a.scenario << ',' << format_number(a.snr_db) << ',' << format_number(a.value) << ','
           << format_number(a.quadrature) << ',' << format_number(a.discrepancy) << ',' << pf(a.pass);
        if (!a.note.empty()) os << " (" << a.note << ')';
        os << '\n';
    }
    os << "\nsummary (json)\n" << summary_json(r).dump(2) << '\n';
}

inline void write_report(const std::filesystem::path& path, const ValidationReport& r) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
    write_report(os, r);
}

}  // namespace fsorf::cli
