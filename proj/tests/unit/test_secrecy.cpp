// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <gtest/gtest.h>

#include "fsorf/cli/presets.hpp"
#include "fsorf/secrecy.hpp"
#include "oracle_values.hpp"

using namespace fsorf;
using namespace fsorf::secrecy;
using channels::Detection;

namespace {

SecrecyScenario single_baseline(double rd_db = 30.0) {
    return cli::single_scenario("strong", 1.1, Detection::heterodyne, rd_db);
}

SecrecyScenario dual_baseline(Detection d = Detection::heterodyne, double rd_db = 20.0) {
    return cli::dual_scenario("strong", 1.1, d, rd_db);
}

}  // namespace

TEST(SopSingle, MatchesPhysicalOracle) {
    const auto e = sop_single(single_baseline());
    EXPECT_NEAR(e.value, oracle::sop_single_baseline, 1e-9);
    EXPECT_EQ(e.provenance, Provenance::closed_form_validated);
    EXPECT_LT(e.error_bound, 1e-9);
}

TEST(SopSingle, MatchesQuadrature) {
    auto s = cli::single_scenario("moderate", 6.7, Detection::intensity, 15.0);
    EXPECT_NEAR(sop_single(s).value, sop_quadrature(s, Topology::single).value, 1e-8);
    s.rd.m = 3;
    EXPECT_NEAR(sop_single(s).value, sop_quadrature(s, Topology::single).value, 1e-8);
}

TEST(SopSingle, PrefactorCorrection) {
    auto s = single_baseline(15.0);
    auto c = Corrections::validated();
    c.prefactor = false;
    // (m-1)/Γ(m) = 1 for m = 2 and 1/2 for m = 4.
    EXPECT_NEAR(sop_single(s, c).value, sop_single(s).value, 1e-12);
    s.rd.m = 4;
    EXPECT_NEAR(1.0 - sop_single(s, c).value, 0.5 * (1.0 - sop_single(s).value), 1e-12);
}

TEST(SopSingle, PrintedFormDiffers) {
    const auto s = single_baseline();
    const auto printed = sop_single(s, Mode::as_printed);
    EXPECT_EQ(printed.provenance, Provenance::closed_form_as_printed);
    EXPECT_GT(std::abs(printed.value - sop_single(s).value), 1e-3);
}

TEST(SopSingle, GammaGammaSpecialCase) {
    auto s = cli::gamma_gamma_scenario("moderate", Detection::heterodyne, 20.0);
    const double general = sop_single(s).value;
    EXPECT_NEAR(sop_single_gg(s).value, general, 1e-12);
    // Heterodyne detection has μ = γ̄, so the printed argument coincides.
    EXPECT_NEAR(sop_single_gg(s, Mode::as_printed).value, general, 1e-12);
    s = cli::gamma_gamma_scenario("moderate", Detection::intensity, 20.0);
    EXPECT_NEAR(sop_single_gg(s).value, sop_quadrature(s, Topology::single).value, 1e-8);
    s.rd.m = 2;
    EXPECT_THROW(sop_single_gg(s), std::invalid_argument);
}

TEST(SopDual, MatchesPhysicalOracle) {
    EXPECT_NEAR(sop_dual(dual_baseline()).value, oracle::sop_dual_baseline, 1e-9);
}

TEST(SopDual, MatchesQuadrature) {
    const auto s = dual_baseline(Detection::intensity, 10.0);
    EXPECT_NEAR(sop_dual(s).value, sop_quadrature(s, Topology::dual).value, 1e-9);
}

TEST(SopDual, MixedDetection) {
    auto s = dual_baseline(Detection::intensity, 10.0);
    s.se1 = cli::malaga_preset("moderate", 6.7, Detection::heterodyne, 10.0);
    EXPECT_NEAR(sop_dual(s).value, sop_quadrature(s, Topology::dual).value, 1e-9);
}

TEST(SopDual, LambdaIndexOrigin) {
    const auto s = dual_baseline();
    const double from_zero = rf_hop_secrecy(s, true);
    EXPECT_NEAR(1.0 - from_zero, hop_outages_quadrature(s).rf.value, 1e-10);
    // The k = 0 term is (ν/(λ+ν))^{m_E} with λ = m_RD Θ/γ̄_RD and ν = m_E/γ̄_E.
    const double lambda = 2.0 * s.theta() / s.rd.avg_snr, nu = 2.0 / s.re2->avg_snr;
    EXPECT_NEAR(from_zero - rf_hop_secrecy(s, false), std::pow(nu / (lambda + nu), 2.0), 1e-14);
}

TEST(SopDual, RequiresSecondEavesdropper) {
    auto s = single_baseline();
    EXPECT_THROW(sop_dual(s), std::invalid_argument);
}

TEST(Spsc, EqualsComplementAtZeroRate) {
    const auto s = single_baseline(10.0);
    EXPECT_NEAR(spsc_single(s).value, 1.0 - sop_single(s.with_rate(0.0)).value, 1e-15);
    const auto d = dual_baseline();
    EXPECT_NEAR(spsc_dual(d).value, 1.0 - sop_dual(d.with_rate(0.0)).value, 1e-15);
    EXPECT_GT(spsc_single(s).value, 1.0 - sop_single(s).value);
}

TEST(Asymptotic, GapShrinks) {
    double previous = 1.0;
    for (double db : {30.0, 50.0, 70.0}) {
        auto s = single_baseline(db);
        set_optical_avg_snr(s.sr, channels::db_to_linear(db));
        const double exact = sop_single(s).value;
        const double gap = std::abs(sop_single_asym(s).value - exact) / exact;
        EXPECT_LT(gap, previous) << db;
        previous = gap;
    }
    EXPECT_LT(previous, 0.1);
}

TEST(Asymptotic, RayleighHopKeptWhenItDominates) {
    // m_RD = 1 decays faster than the optical hop (ξ² = 1.21), so the R-D term leads.
    auto s = cli::gamma_gamma_scenario("strong", Detection::heterodyne, 70.0);
    set_optical_avg_snr(s.sr, channels::db_to_linear(70.0));
    const double exact = sop_single(s).value;
    EXPECT_LT(std::abs(sop_single_asym(s).value - exact) / exact, 1e-4);
    EXPECT_GT(std::abs(sop_single_asym(s, Mode::as_printed).value - exact) / exact, 0.5);
    EXPECT_GT(rf_hop_outage_asym(s), optical_hop_outage_asym(s));
}

TEST(Asymptotic, MixedDetectionMatchesLimit) {
    auto s = cli::single_scenario("strong", 1.1, Detection::intensity, 60.0);
    set_optical_avg_snr(s.sr, channels::db_to_linear(70.0));
    const double exact = optical_hop_outage(s, Corrections::validated()).value;
    EXPECT_LT(std::abs(optical_hop_outage_asym(s) - exact) / exact, 1e-4);
}

TEST(Asymptotic, DiversitySlope) {
    // K2 = {ξ², α, m}/r; the smallest is m = 1.
    EXPECT_DOUBLE_EQ(optical_hop_diversity_slope(single_baseline()), -1.0);
    EXPECT_DOUBLE_EQ(optical_hop_diversity_slope(cli::single_scenario("strong", 1.1, Detection::intensity, 0)), -0.5);
}

TEST(Scenario, Validation) {
    auto s = single_baseline();
    s.rs = -0.1;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    EXPECT_DOUBLE_EQ(single_baseline().theta(), std::exp(0.01));
}

TEST(Provenance, Names) {
    EXPECT_EQ(to_string(Provenance::closed_form_validated), "closed_form_validated");
    EXPECT_EQ(to_string(Provenance::quadrature), "quadrature");
    EXPECT_FALSE(Corrections::as_printed().all());
    EXPECT_TRUE(Corrections::validated().all());
}

TEST(Quadrature, BoundBelowExactEvent) {
    const auto s = single_baseline(15.0);
    EXPECT_LE(sop_quadrature(s, Topology::single, OutageEvent::bound).value,
              sop_quadrature(s, Topology::single, OutageEvent::exact).value);
}
