// SPDX-License-Identifier: Apache-2.0
// Acceptance checks 1-7. Prints one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fsorf/cli/presets.hpp"
#include "fsorf/cli/validate.hpp"
#include "fsorf/secrecy.hpp"
#include "fsorf/specfun/fox_h_bivariate.hpp"
#include "fsorf/specfun/meijer_g.hpp"

using namespace fsorf;
using channels::Detection;

namespace {

// Tolerances.
constexpr double identity_tol = 1e-8;
constexpr double bivariate_tol = 1e-6;
constexpr double mass_tol = 1e-6;
constexpr double boundary_tol = 1e-5;
constexpr double spsc_tol = 1e-10;
constexpr double ordering_tol = 1e-6;
constexpr double asym_gap_limit = 0.10;
constexpr std::uint64_t triangle_samples = 10'000'000;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Clock {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo * std::pow(hi / lo, i / double(n - 1)));
    return v;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Outcome identities() {
    using specfun::MeijerGSpec;
    const double nu = 0.7;
    const MeijerGSpec e(1, 0, {}, {0.0}), r(1, 1, {0.0}, {0.0}), k(2, 0, {}, {nu / 2, -nu / 2});
    double worst = 0.0;
    for (double x : log_grid(0.01, 10.0, 200)) {
        worst = std::max(worst, rel(specfun::meijer_g(e, x), std::exp(-x)));
        worst = std::max(worst, rel(specfun::meijer_g(r, x), 1.0 / (1.0 + x)));
        worst = std::max(worst, rel(specfun::meijer_g(k, x), 2.0 * std::cyl_bessel_k(nu, 2.0 * std::sqrt(x))));
    }
    const specfun::FoxHSpec unit(1, 0, {}, {{0.0, 1.0}});
    const specfun::FoxHBivarSpec h(1, {{0.0, 1.0, 1.0}}, {}, unit, unit);
    double worst2 = 0.0;
    const auto grid = log_grid(0.01, 10.0, 10);
    for (double x : grid)
        for (double y : grid) worst2 = std::max(worst2, rel(specfun::fox_h_bivariate(h, x, y), 1.0 / (1.0 + x + y)));
    return {worst <= identity_tol && worst2 <= bivariate_tol,
            fmt("univariate max rel err %.2e (tol %.0e), bivariate %.2e (tol %.0e)", worst, identity_tol, worst2,
                bivariate_tol)};
}

Outcome distributions() {
    std::vector<std::pair<std::string, channels::OpticalSnrModel>> sets;
    for (const char* t : {"strong", "moderate"})
        for (double xi : {1.1, 6.7})
            for (auto d : {Detection::heterodyne, Detection::intensity})
                sets.push_back({fmt("malaga %s xi=%.1f r=%d", t, xi, int(d)),
                                channels::derive_malaga(cli::malaga_preset(t, xi, d, 10.0)).model});
    for (const char* t : {"strong", "moderate"})
        for (auto d : {Detection::heterodyne, Detection::intensity})
            sets.push_back({fmt("gamma-gamma %s r=%d", t, int(d)),
                            channels::gamma_gamma_link(cli::gamma_gamma_preset(t, 1.1, d, 10.0)).model});
    Outcome o;
    double worst_mass = 0.0;
    for (const auto& [name, m] : sets) {
        // ∫ f(γ) dγ on a log axis, γ = μ e^u.
        const double mass = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            [&](double u) {
                const double g = m.mu * std::exp(u);
                return channels::optical_snr_pdf(m, g) * g;
            },
            -60.0, 12.0, 25, 1e-12);
        worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
        double previous = 0.0;
        bool monotone = true;
        for (double t : log_grid(1e-6, 1e3, 120)) {
            const double c = channels::optical_snr_cdf(m, t * m.mu);
            if (c < previous - 1e-12 || c < 0.0 || c > 1.0 + 1e-12) monotone = false;
            previous = c;
        }
        const double low = channels::optical_snr_cdf(m, 1e-12 * m.mu);
        const double high = channels::optical_snr_ccdf(m, 1e6 * m.mu);
        if (std::abs(mass - 1.0) > mass_tol || !monotone || low > boundary_tol || high > boundary_tol) {
            o.pass = false;
            o.detail += fmt("[%s: mass %.3e monotone %d F(0+) %.1e 1-F(inf) %.1e] ", name.c_str(), mass,
                            int(monotone), low, high);
        }
    }
    o.detail += fmt("%zu parameter sets, max |mass-1| %.2e (tol %.0e)", sets.size(), worst_mass, mass_tol);
    return o;
}

cli::SweepConfig baseline_config(secrecy::Topology t) {
    cli::SweepConfig c;
    c.topology = t;
    c.scenario = t == secrecy::Topology::single ? cli::single_scenario("strong", 1.1, Detection::heterodyne, 0.0)
                                                : cli::dual_scenario("strong", 1.1, Detection::intensity, 0.0);
    c.metrics = {{cli::Quantity::sop, cli::Method::closed}};
    c.mc.sample_count = triangle_samples;
    return c;
}

struct Triangle {
    std::string name;
    cli::ValidationReport report;
    double seconds = 0.0;
    std::filesystem::path path;
};

Outcome oracle_triangle(const std::vector<Triangle>& runs) {
    Outcome o;
    for (const auto& t : runs) {
        std::size_t checked = 0, failed = 0;
        double gap = 0.0, sigma = 0.0;
        for (const auto& r : t.report.oracle) {
            gap = std::max(gap, r.quadrature_gap);
            if (r.mc_checked) {
                ++checked;
                sigma = std::max(sigma, r.mc_sigma);
            }
            if (!r.pass) ++failed;
        }
        if (failed || t.report.oracle.empty() || t.seconds > 600.0) o.pass = false;
        o.detail += fmt("%s: %zu points, %zu MC-checked, max |closed-quad| %.1e, max MC dev %.2f SE, %zu fail, %.0fs; ",
                        t.name.c_str(), t.report.oracle.size(), checked, gap, sigma, failed, t.seconds);
    }
    return o;
}

secrecy::OpticalLink random_optical(std::mt19937_64& g) {
    std::uniform_real_distribution<double> alpha(2.0, 6.0), xi(0.8, 7.0), db(0.0, 40.0);
    std::uniform_int_distribution<int> beta(1, 4), r(1, 2), family(0, 3);
    const auto d = r(g) == 1 ? Detection::heterodyne : Detection::intensity;
    if (family(g) == 0) return channels::GammaGammaLink{alpha(g), double(beta(g)), xi(g), d, channels::db_to_linear(db(g))};
    channels::MalagaLink l;
    l.alpha = alpha(g);
    l.beta = beta(g);
    l.xi = xi(g);
    l.detection = d;
    l.avg_snr = channels::db_to_linear(db(g));
    return l;
}

Outcome spsc_identity() {
    std::mt19937_64 g(20240601);
    std::uniform_real_distribution<double> db(0.0, 40.0), rate(0.005, 0.5);
    std::uniform_int_distribution<int> m(1, 4);
    double worst = 0.0;
    std::size_t failures = 0;
    std::string notes;
    for (int i = 0; i < 50; ++i) {
        secrecy::SecrecyScenario s;
        s.sr = random_optical(g);
        s.se1 = random_optical(g);
        s.rd = {m(g), channels::db_to_linear(db(g))};
        s.re2 = channels::NakagamiLink{m(g), channels::db_to_linear(db(g))};
        s.rs = rate(g);
        try {
            const double single = secrecy::spsc_single(s).value - (1.0 - secrecy::sop_single(s.with_rate(0.0)).value);
            const double dual = secrecy::spsc_dual(s).value - (1.0 - secrecy::sop_dual(s.with_rate(0.0)).value);
            worst = std::max({worst, std::abs(single), std::abs(dual)});
        } catch (const std::exception& e) {
            ++failures;
            notes += fmt("[scenario %d: %s] ", i, e.what());
        }
    }
    return {worst <= spsc_tol && failures == 0,
            notes + fmt("50 random scenarios x {single, dual}: max |SPSC - (1 - SOP|Rs=0)| %.1e (tol %.0e), %zu failed",
                        worst, spsc_tol, failures)};
}

// SOP on the figure grid, keyed by curve name.
using Curves = std::map<std::string, std::vector<double>>;

Curves closed_curves(const std::string& figure) {
    Curves out;
    for (const auto& curve : cli::figure_preset(figure).curves) {
        auto& v = out[curve.name];
        for (double db : curve.config.grid()) {
            const auto s = cli::at_point(curve.config, db);
            v.push_back(
                cli::detail::closed_form(s, cli::Quantity::sop, curve.config.topology, secrecy::Mode::validated).value);
        }
    }
    return out;
}

struct OrderingCount {
    std::size_t checks = 0, violations = 0;
    double worst = 0.0;
    std::string first;

    // Expects lower[i] <= upper[i] + tol pointwise.
    void pointwise(const std::vector<double>& lower, const std::vector<double>& upper, const std::string& what) {
        for (std::size_t i = 0; i < lower.size(); ++i) {
            ++checks;
            const double excess = lower[i] - upper[i];
            if (excess > ordering_tol) {
                ++violations;
                worst = std::max(worst, excess);
                if (first.empty()) first = what + fmt(" at grid index %zu (%.6g vs %.6g)", i, lower[i], upper[i]);
            }
        }
    }

    void non_increasing(const std::vector<double>& v, const std::string& what) {
        for (std::size_t i = 1; i < v.size(); ++i) pointwise({v[i]}, {v[i - 1]}, what + " in rd");
    }
};

Outcome orderings() {
    OrderingCount c;
    const auto fig2 = closed_curves("fig2");
    const auto fig3 = closed_curves("fig3");
    const auto fig6 = closed_curves("fig6");
    const auto fig7 = closed_curves("fig7");
    for (const auto* curves : {&fig2, &fig3, &fig6, &fig7})
        for (const auto& [name, v] : *curves) c.non_increasing(v, name);
    for (const std::string t : {"strong", "moderate"})
        for (const std::string xi : {"1.1", "6.7"}) {
            const auto key = [&](const char* fig, const char* r, const std::string& tt, const std::string& x) {
                return std::string(fig) + "_" + tt + "_" + r + "_xi" + x;
            };
            // r = 1 below r = 2.
            c.pointwise(fig2.at(key("fig2", "r1", t, xi)), fig2.at(key("fig2", "r2", t, xi)), key("fig2", "r1<=r2", t, xi));
            c.pointwise(fig7.at(key("fig7", "r1", t, xi)), fig6.at(key("fig6", "r2", t, xi)), key("dual", "r1<=r2", t, xi));
            // Moderate below strong.
            if (t == "moderate") {
                for (const char* r : {"r1", "r2"})
                    c.pointwise(fig2.at(key("fig2", r, "moderate", xi)), fig2.at(key("fig2", r, "strong", xi)),
                                key("fig2", "moderate<=strong", r, xi));
                c.pointwise(fig6.at(key("fig6", "r2", "moderate", xi)), fig6.at(key("fig6", "r2", "strong", xi)),
                            key("fig6", "moderate<=strong", "", xi));
                c.pointwise(fig7.at(key("fig7", "r1", "moderate", xi)), fig7.at(key("fig7", "r1", "strong", xi)),
                            key("fig7", "moderate<=strong", "", xi));
            }
        }
    for (const std::string t : {"strong", "moderate"}) {
        // Larger ξ (weaker pointing error) gives lower SOP.
        for (const char* r : {"r1", "r2"})
            c.pointwise(fig2.at("fig2_" + t + "_" + r + "_xi6.7"), fig2.at("fig2_" + t + "_" + r + "_xi1.1"),
                        "fig2 xi " + t + r);
        c.pointwise(fig6.at("fig6_" + t + "_r2_xi6.7"), fig6.at("fig6_" + t + "_r2_xi1.1"), "fig6 xi " + t);
        c.pointwise(fig7.at("fig7_" + t + "_r1_xi6.7"), fig7.at("fig7_" + t + "_r1_xi1.1"), "fig7 xi " + t);
        c.pointwise(fig3.at("fig3_" + t + "_r1_xi1.1"), fig3.at("fig3_" + t + "_r2_xi1.1"), "fig3 r " + t);
    }
    for (const char* r : {"r1", "r2"})
        c.pointwise(fig3.at(std::string("fig3_moderate_") + r + "_xi1.1"), fig3.at(std::string("fig3_strong_") + r + "_xi1.1"),
                    std::string("fig3 moderate<=strong ") + r);
    std::string detail = fmt("%zu pointwise checks, %zu violations (tol %.0e)", c.checks, c.violations, ordering_tol);
    if (c.violations) detail += fmt(", worst excess %.3e, first: ", c.worst) + c.first;
    return {c.violations == 0, detail};
}

Outcome asymptotics() {
    Outcome o;
    struct Case {
        std::string name;
        secrecy::SecrecyScenario s;
        secrecy::Topology t;
    };
    const std::vector<Case> cases{
        {"fig2 baseline", cli::single_scenario("strong", 1.1, Detection::heterodyne, 0.0), secrecy::Topology::single},
        {"fig3 baseline", cli::gamma_gamma_scenario("strong", Detection::heterodyne, 0.0), secrecy::Topology::single},
        {"fig6 baseline", cli::dual_scenario("strong", 1.1, Detection::intensity, 0.0), secrecy::Topology::dual},
        {"fig7 baseline", cli::dual_scenario("strong", 1.1, Detection::heterodyne, 0.0), secrecy::Topology::dual},
    };
    for (const auto& c : cases) {
        std::vector<double> gaps;
        try {
            for (double db : {30.0, 50.0, 70.0}) {
                auto s = c.s;
                const double v = channels::db_to_linear(db);
                secrecy::set_optical_avg_snr(s.sr, v);
                s.rd.avg_snr = v;
                const bool single = c.t == secrecy::Topology::single;
                const double exact = single ? secrecy::sop_single(s).value : secrecy::sop_dual(s).value;
                const double asym = single ? secrecy::sop_single_asym(s).value : secrecy::sop_dual_asym(s).value;
                gaps.push_back(std::abs(asym - exact) / exact);
            }
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail += c.name + ": " + e.what() + "; ";
            continue;
        }
        const bool ok = gaps[1] < gaps[0] && gaps[2] < gaps[1] && gaps[2] < asym_gap_limit;
        o.pass = o.pass && ok;
        o.detail += fmt("%s gaps %.2e/%.2e/%.2e%s; ", c.name.c_str(), gaps[0], gaps[1], gaps[2], ok ? "" : " (FAIL)");
    }
    o.detail += fmt("gamma_SR = gamma_RD in {30, 50, 70} dB, limit %.0f%% at 70 dB", 100 * asym_gap_limit);
    return o;
}

Outcome arbitration(const std::vector<Triangle>& runs) {
    Outcome o;
    std::map<std::string, std::pair<std::size_t, double>> items;
    for (const auto& t : runs) {
        std::ifstream in(t.path);
        std::stringstream text;
        text << in.rdbuf();
        if (text.str().find("summary (json)") == std::string::npos) {
            o.pass = false;
            o.detail += "missing report " + t.path.string() + "; ";
        }
        if (!t.report.validated_pass()) o.pass = false;
        for (const auto& a : t.report.items) {
            auto& [fails, worst] = items[a.item];
            if (!a.pass) ++fails;
            if (std::isfinite(a.discrepancy)) worst = std::max(worst, a.discrepancy);
        }
    }
    for (const char* required : {"prefactor", "lambda_index", "varpi_double", "upsilon_form"})
        if (!items.count(required)) {
            o.pass = false;
            o.detail += std::string("missing item ") + required + "; ";
        }
    for (const auto& [name, v] : items)
        o.detail += fmt("%s: as-printed %s (%zu failing rows, max discrepancy %.2e); ", name.c_str(),
                        v.first ? "FAIL" : "PASS", v.first, v.second);
    o.detail += "validated rows pass criterion 3";
    return o;
}

void report(int n, const Outcome& o, double seconds) {
    std::printf("criterion %d: %s  %s [%.1fs]\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds);
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    std::uint64_t samples = triangle_samples;
    std::filesystem::path out = "acceptance_reports";
    app.add_option("--samples", samples, "Monte Carlo samples per point for criteria 3 and 7");
    app.add_option("--out", out, "directory for the validation reports");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    auto run = [&](int n, const std::function<Outcome()>& f) {
        const Clock clock;
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        report(n, o, clock.seconds());
        all = all && o.pass;
    };

    run(1, identities);
    run(2, distributions);

    std::vector<Triangle> runs;
    run(3, [&] {
        for (auto [name, t] : {std::pair{"fig2", secrecy::Topology::single}, {"fig6", secrecy::Topology::dual}}) {
            const Clock clock;
            auto c = baseline_config(t);
            c.mc.sample_count = samples;
            auto r = cli::run_validation(c);
            const auto path = out / (std::string(name) + "_baseline_validation.txt");
            cli::write_report(path, r);
            runs.push_back({std::string(name) + " baseline", std::move(r), clock.seconds(), path});
        }
        return oracle_triangle(runs);
    });
    run(4, spsc_identity);
    run(5, orderings);
    run(6, asymptotics);
    run(7, [&] { return arbitration(runs); });
    return all ? 0 : 1;
}
