// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fsorf/cli/config.hpp"
#include "fsorf/cli/presets.hpp"
#include "fsorf/cli/sweep.hpp"
#include "fsorf/cli/validate.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_numeric = 3;

struct Overrides {
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> mode;

    void apply(fsorf::cli::SweepConfig& c) const {
        if (samples) c.mc.sample_count = *samples;
        if (seed) c.mc.seed = *seed;
        if (out) c.output = *out;
        if (mode) c.mode = *mode == "printed" ? fsorf::secrecy::Mode::as_printed : fsorf::secrecy::Mode::validated;
    }
};

int run_sweep(const std::string& path, const Overrides& o) {
    auto c = fsorf::cli::load_config(path);
    o.apply(c);
    const auto r = fsorf::cli::run_sweep(c);
    fsorf::cli::write_csv(c.output, r.rows);
    for (const auto& row : r.rows)
        if (!row.note.empty())
            std::cerr << "numeric failure: " << row.metric << " (" << row.provenance << ") at " << row.snr_db
                      << " dB: " << row.note << '\n';
    std::cout << c.output.string() << ": " << r.rows.size() << " rows\n";
    return r.failures ? exit_numeric : exit_ok;
}

int run_validate(const std::string& path, const Overrides& o) {
    auto c = fsorf::cli::load_config(path);
    o.apply(c);
    if (!o.out) c.output.replace_extension(".report.txt");
    const auto r = fsorf::cli::run_validation(c);
    fsorf::cli::write_report(c.output, r);
    std::cout << c.output.string() << ": validated " << (r.validated_pass() ? "PASS" : "FAIL") << '\n';
    return r.numeric_failures ? exit_numeric : exit_ok;
}

int run_figure(const std::string& name, const Overrides& o) {
    const auto fig = fsorf::cli::figure_preset(name);
    const std::filesystem::path dir = o.out.value_or("figures/" + name);
    std::size_t failures = 0;
    for (auto curve : fig.curves) {
        Overrides local = o;
        local.out = (dir / (curve.name + ".csv")).string();
        local.apply(curve.config);
        const auto r = fsorf::cli::run_sweep(curve.config);
        fsorf::cli::write_csv(curve.config.output, r.rows);
        failures += r.failures;
        std::cout << curve.config.output.string() << '\n';
    }
    return failures ? exit_numeric : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy outage and SPSC of mixed FSO/RF relay links"};
    app.require_subcommand(1);
    Overrides o;
    auto add_flags = [&](CLI::App* sub) {
        sub->add_option("--samples", o.samples, "Monte Carlo samples per point")->check(CLI::Range(10'000ULL, ~0ULL));
        sub->add_option("--seed", o.seed, "Monte Carlo seed");
        sub->add_option("--out", o.out, "output path (directory for figure)");
        sub->add_option("--mode", o.mode, "closed-form mode")->check(CLI::IsMember({"printed", "validated"}));
    };
    std::string target;
    auto* sweep = app.add_subcommand("sweep", "evaluate a config sweep and write CSV");
    sweep->add_option("config", target, "INI config")->required();
    add_flags(sweep);
    auto* validate = app.add_subcommand("validate", "arbitrate closed forms against quadrature and Monte Carlo");
    validate->add_option("config", target, "INI config")->required();
    add_flags(validate);
    auto* figure = app.add_subcommand("figure", "write the CSV curves of a figure preset");
    figure->add_option("name", target, "fig2..fig7")->required()->check(CLI::IsMember(fsorf::cli::figure_names()));
    add_flags(figure);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_config;
    }
    try {
        if (*sweep) return run_sweep(target, o);
        if (*validate) return run_validate(target, o);
        return run_figure(target, o);
    } catch (const fsorf::cli::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_numeric;
    }
}
