#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>
#include <vector>

#include "tqgate/scattering.hpp"

using namespace tqgate;

namespace {

// Scenario-2 emitter with the SB defaults used throughout the figures.
EmitterParams sb_emitter(double gamma_star = 0.0) {
    EmitterParams e = preset_scenario2().emitter;
    e.gamma_star = gamma_star;
    return e;
}

// Dense log-grid argmax of the fidelity over sigma_p, the oracle for the
// golden-section optimizer.
double grid_argmax(double c, const EmitterParams& e, const ScatteringConfig& cfg,
                   double center, int points = 100001) {
    double best_f = -1e300, best_s = 0.0;
    const double lo = std::log(center) - 2.0 * std::log(10.0);
    const double hi = std::log(center) + 2.0 * std::log(10.0);
    for (int i = 0; i < points; ++i) {
        ScatteringConfig probe = cfg;
        probe.sigma_p = std::exp(lo + (hi - lo) * i / (points - 1));
        const double f = sb_fidelity(probe, c, e);
        if (f > best_f) {
            best_f = f;
            best_s = probe.sigma_p;
        }
    }
    return best_s;
}

const double kBulkDephasing = two_pi * 0.1e6;
const double kDeviceDephasing = two_pi * 10e6;

} // namespace

TEST_CASE("sb gate time") {
    const double width = 8.0 * std::numbers::pi * std::sqrt(2.0 * std::log(2.0));
    CHECK(sb_gate_time(width * 1e6) == doctest::Approx(1e-6).epsilon(1e-12));
    CHECK(sb_gate_time(2.0 * width * 1e6) == doctest::Approx(0.5e-6).epsilon(1e-12));
    CHECK(sb_gate_time(3.17e6) == doctest::Approx(9.34e-6).epsilon(2e-3));
    CHECK_THROWS_AS(sb_gate_time(0.0), std::invalid_argument);
}

TEST_CASE("sb efficiency") {
    EmitterParams e = sb_emitter();
    DetectionChain det;
    ScatteringConfig cfg;

    SUBCASE("perfect limit") {
        det.eta_d = 1.0;
        CHECK(sb_efficiency(cfg, 1e15, e, det) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("boundary at C = 2.5") {
        det.eta_d = 1.0;
        CHECK(sb_efficiency(cfg, 2.5, e, det) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("quoted C = 14 point") {
        CHECK(sb_efficiency(cfg, 14.0, e, det) ==
              doctest::Approx(0.7803571428571427).epsilon(1e-12));
    }
    SUBCASE("matches the zero-detuning form exactly when detunings are equal") {
        cfg.delta_eps_a = 3e6;
        cfg.delta_eps_b = 3e6;
        det.eta_d = 1.0;
        for (double c : {3.0, 14.0, 74.0})
            CHECK(sb_efficiency(cfg, c, e, det) ==
                  doctest::Approx(1.0 - 5.0 / (2.0 * c)).epsilon(1e-14));
    }
}

TEST_CASE("sb fidelity at the closed-form optimum") {
    EmitterParams e = sb_emitter();
    ScatteringConfig cfg;

    const double sigma = sb_sigma_opt_closed(74.0, e, 0.008);
    CHECK(sigma == doctest::Approx(3167441.60550957).epsilon(1e-10));
    cfg.sigma_p = sigma;
    CHECK(sb_gate_time(sigma) == doctest::Approx(9.342411037509957e-06).epsilon(1e-10));
    CHECK(sb_fidelity(cfg, 74.0, e) == doctest::Approx(0.9909769178334195).epsilon(1e-10));
    // the two competing error terms balance at the closed form
    const double gam_term = e.spin_decoherence() * sb_gate_time(sigma);
    CHECK(gam_term == doctest::Approx(4.448767160719027e-03).epsilon(1e-9));
}

TEST_CASE("sb fidelity ideal limit") {
    EmitterParams e = sb_emitter();
    e.t2_spin = 1e30;
    e.t1_spin = 1e30;
    ScatteringConfig cfg;
    cfg.sigma_p = 1e-3; // sigma_p -> 0 kills the pulse-width term
    CHECK(sb_fidelity(cfg, 1e15, e) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sigma_p closed form scaling and degeneracy") {
    EmitterParams e = sb_emitter();
    const double s1 = sb_sigma_opt_closed(10.0, e, 0.008);
    const double s8 = sb_sigma_opt_closed(80.0, e, 0.008);
    CHECK(s8 / s1 == doctest::Approx(4.0).epsilon(1e-12)); // C^{2/3} power law

    EmitterParams frozen = e;
    frozen.t2_spin = 1e300;
    frozen.t1_spin = 1e300;
    CHECK(sb_sigma_opt_closed(74.0, frozen, 0.008) == doctest::Approx(0.0).epsilon(1e-20));

    // the bracket polynomial 11 - 20 y + 12 y^2 (y = (2g/k)^2) has no real
    // roots, so the closed form stays defined across the coupling range
    for (double gok : {0.0, 0.5, 1.0, 5.0})
        CHECK(sb_sigma_opt_closed(74.0, e, gok) > 0.0);
}

TEST_CASE("numeric optimum sits at 2^{-1/3} of the closed form") {
    EmitterParams e = sb_emitter();
    ScatteringConfig cfg;
    const double expected = std::pow(2.0, -1.0 / 3.0);
    for (double c : {14.0, 74.0, 1000.0}) {
        const double closed = sb_sigma_opt_closed(c, e, cfg.g_over_kappa);
        SigmaOptimum num = sb_sigma_opt_numeric(c, e, cfg);
        CHECK_FALSE(num.endpoint);
        CHECK(num.sigma_p / closed == doctest::Approx(expected).epsilon(1e-6));
        // dense-grid oracle
        const double grid = grid_argmax(c, e, cfg, closed, 20001);
        CHECK(num.sigma_p == doctest::Approx(grid).epsilon(1e-3));
        // and it dominates the closed form
        ScatteringConfig at_closed = cfg;
        at_closed.sigma_p = closed;
        CHECK(num.fidelity >= sb_fidelity(at_closed, c, e) - 1e-12);
    }
    // improvement at scenario-2 parameters is about 5e-4
    SigmaOptimum num = sb_sigma_opt_numeric(74.0, e, cfg);
    ScatteringConfig at_closed = cfg;
    at_closed.sigma_p = sb_sigma_opt_closed(74.0, e, cfg.g_over_kappa);
    CHECK(num.fidelity - sb_fidelity(at_closed, 74.0, e) ==
          doctest::Approx(4.899e-4).epsilon(1e-2));
}

TEST_CASE("degenerate objective is flagged") {
    // Gamma = 0 removes the only term that penalizes slow gates; the closed
    // form collapses to zero and the optimizer reports the degeneracy.
    EmitterParams frozen = sb_emitter();
    frozen.t1_spin = std::numeric_limits<double>::infinity();
    frozen.t2_spin = std::numeric_limits<double>::infinity();
    SigmaOptimum num = sb_sigma_opt_numeric(74.0, frozen, ScatteringConfig{});
    CHECK(num.endpoint);
    CHECK(num.sigma_p == 0.0);
    GateMetrics m = evaluate_sb(ScatteringConfig{}, 74.0, frozen, DetectionChain{});
    CHECK(m.has_flag(flag::sigma_degenerate));
}

TEST_CASE("fidelity ordering on the cooperativity and dephasing grids") {
    const std::vector<double> cs{14.0, 74.0, 250.0, 1000.0};
    std::vector<double> gstars;
    for (int i = 0; i < 9; ++i)
        gstars.push_back(kBulkDephasing *
                         std::pow(kDeviceDephasing / kBulkDephasing, i / 8.0));

    for (double c : cs) {
        ScatteringConfig cfg;
        cfg.sigma_p = sb_sigma_opt_numeric(c, sb_emitter(), cfg).sigma_p;
        double prev = 2.0;
        for (double gs : gstars) {
            const double f = sb_fidelity(cfg, c, sb_emitter(gs));
            CHECK(f < prev); // strictly decreasing in gamma*
            prev = f;
        }
    }
    for (double gs : gstars) {
        double prev = -1e300;
        for (double c : cs) {
            ScatteringConfig cfg;
            cfg.sigma_p = sb_sigma_opt_numeric(c, sb_emitter(), cfg).sigma_p;
            const double f = sb_fidelity(cfg, c, sb_emitter(gs));
            CHECK(f > prev); // increasing in C
            prev = f;
        }
    }
}

TEST_CASE("evaluate_sb clamps and flags negative raw values") {
    EmitterParams e = sb_emitter(kDeviceDephasing);
    DetectionChain det;
    ScatteringConfig cfg;
    GateMetrics m = evaluate_sb(cfg, 2.0, e, det); // C below the eta boundary
    CHECK(m.efficiency < 0.0);
    CHECK(m.efficiency_clamped() == 0.0);
    CHECK(m.has_flag(flag::efficiency_clamped));
    CHECK(m.has_flag(flag::sigma_optimized));
}
