// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fsorf/channels/units.hpp"
#include "fsorf/mc/estimate.hpp"
#include "fsorf/secrecy/quadrature.hpp"
#include "fsorf/secrecy/scenario.hpp"

namespace fsorf::cli {

/// Malformed or inconsistent configuration (exit status 2).
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Quantity { sop, spsc };
enum class Method { closed, asym, quadrature, mc };

struct MetricSpec {
    Quantity quantity = Quantity::sop;
    Method method = Method::closed;
};

/// Which average SNR a sweep moves. `sr_rd` moves γ̄_SR and γ̄_RD together (high-SNR studies).
enum class SweepVariable { sr, se1, rd, re2, sr_rd };

struct SweepConfig {
    secrecy::SecrecyScenario scenario;
    secrecy::Topology topology = secrecy::Topology::single;
    SweepVariable variable = SweepVariable::rd;
    double start_db = 0.0;
    double stop_db = 40.0;
    double step_db = 5.0;
    std::vector<MetricSpec> metrics;
    mc::SimConfig mc;
    secrecy::Mode mode = secrecy::Mode::validated;
    std::filesystem::path output = "sweep.csv";

    std::vector<double> grid() const {
        std::vector<double> g;
        const auto n = static_cast<long>(std::floor((stop_db - start_db) / step_db + 1e-9));
        for (long i = 0; i <= n; ++i) g.push_back(start_db + step_db * static_cast<double>(i));
        return g;
    }

    void validate() const {
        if (!(step_db > 0.0)) throw config_error("sweep.step_db must be positive");
        if (!(start_db < stop_db)) throw config_error("sweep.start_db must be below sweep.stop_db");
        if (metrics.empty()) throw config_error("sweep.metrics must list at least one metric");
        if (topology == secrecy::Topology::dual && !scenario.dual())
            throw config_error("dual topology requires an [re2] section");
        if ((variable == SweepVariable::re2) && !scenario.dual()) throw config_error("sweep over re2 needs [re2]");
        try {
            scenario.validate();
            mc.validate();
        } catch (const std::invalid_argument& e) {
            throw config_error(e.what());
        }
    }
};

/// Scenario with the swept average SNR set to `db`.
inline secrecy::SecrecyScenario at_point(const SweepConfig& c, double db) {
    auto s = c.scenario;
    const double v = channels::db_to_linear(db);
    switch (c.variable) {
        case SweepVariable::sr: secrecy::set_optical_avg_snr(s.sr, v); break;
        case SweepVariable::se1: secrecy::set_optical_avg_snr(s.se1, v); break;
        case SweepVariable::rd: s.rd.avg_snr = v; break;
        case SweepVariable::re2: s.re2->avg_snr = v; break;
        case SweepVariable::sr_rd:
            secrecy::set_optical_avg_snr(s.sr, v);
            s.rd.avg_snr = v;
            break;
    }
    return s;
}

inline std::string metric_name(Quantity q, secrecy::Topology t) {
    return std::string(q == Quantity::sop ? "sop" : "spsc") + (t == secrecy::Topology::single ? "_single" : "_dual");
}

namespace detail {

using boost::property_tree::ptree;

inline std::string lower(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
}

template <class T>
T get(const ptree& pt, const std::string& key) {
    try {
        return pt.get<T>(key);
    } catch (const boost::property_tree::ptree_error& e) {
        throw config_error("missing or malformed key '" + key + "'");
    }
}

template <class T>
T get(const ptree& pt, const std::string& key, T fallback) {
    try {
        return pt.get<T>(key, fallback);
    } catch (const boost::property_tree::ptree_error& e) {
        throw config_error("malformed key '" + key + "'");
    }
}

inline channels::Detection parse_detection(const std::string& v) {
    const auto s = lower(v);
    if (s == "hd" || s == "heterodyne" || s == "1") return channels::Detection::heterodyne;
    if (s == "imdd" || s == "im/dd" || s == "intensity" || s == "2") return channels::Detection::intensity;
    throw config_error("unknown detection '" + v + "' (expected hd or imdd)");
}

inline secrecy::OpticalLink parse_optical(const ptree& pt, const std::string& section) {
    const auto p = section + ".";
    const auto family = lower(get<std::string>(pt, p + "family", "malaga"));
    const auto detection = parse_detection(get<std::string>(pt, p + "detection", "hd"));
    const double snr = channels::db_to_linear(get<double>(pt, p + "snr_db"));
    const double xi = get<double>(pt, p + "xi");
    if (family == "gamma_gamma" || family == "gg") {
        return channels::GammaGammaLink{get<double>(pt, p + "alpha"), get<double>(pt, p + "beta"), xi, detection, snr};
    }
    if (family != "malaga") throw config_error("unknown optical family '" + family + "'");
    const double beta = get<double>(pt, p + "beta");
    if (beta != std::floor(beta) || beta < 1.0) throw config_error(section + ".beta must be a positive integer");
    channels::MalagaLink l;
    l.alpha = get<double>(pt, p + "alpha");
    l.beta = static_cast<int>(beta);
    l.rho = get<double>(pt, p + "rho", l.rho);
    l.b0 = get<double>(pt, p + "b0", l.b0);
    l.omega = get<double>(pt, p + "omega", l.omega);
    l.phase_diff = get<double>(pt, p + "phase_diff", l.phase_diff);
    l.xi = xi;
    l.detection = detection;
    l.avg_snr = snr;
    return l;
}

inline channels::NakagamiLink parse_nakagami(const ptree& pt, const std::string& section) {
    const double m = get<double>(pt, section + ".m");
    if (m != std::floor(m) || m < 1.0) throw config_error(section + ".m must be a positive integer");
    return {static_cast<int>(m), channels::db_to_linear(get<double>(pt, section + ".snr_db"))};
}

inline std::vector<MetricSpec> parse_metrics(const std::string& list) {
    std::vector<MetricSpec> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        const auto cut = item.find('_');
        if (cut == std::string::npos) throw config_error("metric '" + item + "' must look like sop_closed");
        const auto q = lower(item.substr(0, cut)), m = lower(item.substr(cut + 1));
        MetricSpec spec;
        if (q == "sop") spec.quantity = Quantity::sop;
        else if (q == "spsc") spec.quantity = Quantity::spsc;
        else throw config_error("unknown quantity in metric '" + item + "'");
        if (m == "closed") spec.method = Method::closed;
        else if (m == "asym") spec.method = Method::asym;
        else if (m == "quadrature") spec.method = Method::quadrature;
        else if (m == "mc") spec.method = Method::mc;
        else throw config_error("unknown method in metric '" + item + "'");
        out.push_back(spec);
    }
    return out;
}

inline SweepVariable parse_variable(const std::string& v) {
    const auto s = lower(v);
    if (s == "sr") return SweepVariable::sr;
    if (s == "se1") return SweepVariable::se1;
    if (s == "rd") return SweepVariable::rd;
    if (s == "re2") return SweepVariable::re2;
    if (s == "sr_rd") return SweepVariable::sr_rd;
    throw config_error("unknown sweep variable '" + v + "'");
}

}  // namespace detail

/// Parses an INI sweep description:
///   [scenario] topology, rs     [sr] [se1] optical links     [rd] [re2] Nakagami links
///   [sweep] variable, start_db, stop_db, step_db, metrics, mode    [mc] samples, seed    [output] path
inline SweepConfig parse_config(std::istream& in) {
    detail::ptree pt;
    try {
        boost::property_tree::read_ini(in, pt);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw config_error(std::string("cannot parse config: ") + e.what());
    }
    SweepConfig c;
    const auto topology = detail::lower(detail::get<std::string>(pt, "scenario.topology", "single"));
    if (topology == "single") c.topology = secrecy::Topology::single;
    else if (topology == "dual") c.topology = secrecy::Topology::dual;
    else throw config_error("scenario.topology must be single or dual");
    c.scenario.rs = detail::get<double>(pt, "scenario.rs", 0.01);
    c.scenario.sr = detail::parse_optical(pt, "sr");
    c.scenario.se1 = detail::parse_optical(pt, "se1");
    c.scenario.rd = detail::parse_nakagami(pt, "rd");
    if (pt.get_child_optional("re2")) c.scenario.re2 = detail::parse_nakagami(pt, "re2");
    c.variable = detail::parse_variable(detail::get<std::string>(pt, "sweep.variable", "rd"));
    c.start_db = detail::get<double>(pt, "sweep.start_db");
    c.stop_db = detail::get<double>(pt, "sweep.stop_db");
    c.step_db = detail::get<double>(pt, "sweep.step_db");
    c.metrics = detail::parse_metrics(detail::get<std::string>(pt, "sweep.metrics", "sop_closed"));
    c.mc.sample_count = detail::get<std::uint64_t>(pt, "mc.samples", 1'000'000);
    c.mc.seed = detail::get<std::uint64_t>(pt, "mc.seed", 1);
    const auto mode = detail::lower(detail::get<std::string>(pt, "sweep.mode", "validated"));
    if (mode == "validated") c.mode = secrecy::Mode::validated;
    else if (mode == "printed") c.mode = secrecy::Mode::as_printed;
    else throw config_error("sweep.mode must be printed or validated");
    c.output = detail::get<std::string>(pt, "output.path", "sweep.csv");
    return c;
}

inline SweepConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config '" + path.string() + "'");
    return parse_config(in);
}

}  // namespace fsorf::cli
