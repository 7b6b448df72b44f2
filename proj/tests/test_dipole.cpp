#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "tqgate/dipole.hpp"

using namespace tqgate;

namespace {
DipoleConfig at(double r, double rabi = 0.7e6) {
    DipoleConfig c;
    c.distance = r;
    c.rabi = rabi;
    return c;
}
} // namespace

TEST_CASE("dipolar coupling strength") {
    PhysConsts consts;

    SUBCASE("ground g at 10 nm gives J_z/h = 26.2 kHz") {
        DipoleCoupling j = dipolar_coupling(at(10e-9));
        CHECK(j.j_z / consts.h == doctest::Approx(26220.5).epsilon(1e-4));
        CHECK(j.j_z / j.j_x == doctest::Approx(2.0).epsilon(1e-12)); // isotropic g
    }
    SUBCASE("inverse cube law") {
        DipoleCoupling near = dipolar_coupling(at(10e-9));
        DipoleCoupling far = dipolar_coupling(at(20e-9));
        CHECK(near.j_z / far.j_z == doctest::Approx(8.0).epsilon(1e-12));
    }
    SUBCASE("transverse coupling vanishes with g_perp = 0") {
        DipoleConfig c = at(10e-9);
        c.g_perp = 0.0;
        DipoleCoupling j = dipolar_coupling(c);
        CHECK(j.j_x == 0.0);
        CHECK(j.j_y == 0.0);
    }
    SUBCASE("J_z/J_x = 2 (g_z/g_x)^2") {
        DipoleConfig c = at(10e-9);
        c.g_par = 3.0;
        c.g_perp = 1.5;
        DipoleCoupling j = dipolar_coupling(c);
        CHECK(j.j_z / j.j_x == doctest::Approx(2.0 * 4.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(dipolar_coupling(at(0.0)), std::invalid_argument);
}

TEST_CASE("magnetic dipole gate times") {
    DipoleConfig cfg = at(10e-9, 0.7e6);
    DipoleCoupling j = dipolar_coupling(cfg);
    MdTimes t = md_times(cfg, j.j_z);
    CHECK(t.t_act == doctest::Approx(4.487989505128276e-06).epsilon(1e-12));
    CHECK(t.t_int == doctest::Approx(4.767259534300438e-06).epsilon(1e-4));
    CHECK(t.total == doctest::Approx(1.374323854455699e-05).epsilon(1e-4));
    CHECK(t.total == doctest::Approx(2.0 * t.t_act + t.t_int).epsilon(1e-15));
    CHECK(t.total < 2.1e-3); // well under the spin decoherence time
}

TEST_CASE("magnetic dipole fidelity") {
    EmitterParams emitter = preset_scenario1().emitter;

    SUBCASE("clean rates and no transverse coupling give 1") {
        DipoleConfig cfg = at(10e-9);
        cfg.g_perp = 0.0;
        DipoleCoupling j = dipolar_coupling(cfg);
        CHECK(md_fidelity(DipoleRates{}, md_times(cfg, j.j_z), j) ==
              doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("isotropic g pays the full second-order coefficient") {
        // a = (32 (2 - sqrt 2) - pi^2)/64 with (J_x + J_y)/J_z = 1
        DipoleConfig cfg = at(10e-9);
        DipoleCoupling j = dipolar_coupling(cfg);
        const double f = md_fidelity(DipoleRates{}, md_times(cfg, j.j_z), j);
        CHECK(1.0 - f == doctest::Approx(0.1386806500464312).epsilon(1e-12));
    }
    SUBCASE("branched hole-decay rates leave fidelity decreasing in r") {
        DipoleRates rates;
        rates.gamma_1_up = 0.9 * emitter.gamma;
        rates.gamma_1_dn = 0.1 * emitter.gamma;
        double prev = 1e300;
        for (double r = 5e-9; r <= 50e-9; r += 5e-9) {
            DipoleConfig cfg = at(r);
            DipoleCoupling j = dipolar_coupling(cfg);
            const double f = md_fidelity(rates, md_times(cfg, j.j_z), j);
            CHECK(f < prev);
            prev = f;
        }
    }
    SUBCASE("evaluator uses the ground-manifold rates and flags the defaults") {
        GateMetrics m = evaluate_mdg(at(10e-9), emitter);
        CHECK(m.has_flag(flag::nuclear_rates_default));
        CHECK(m.efficiency == 1.0);
        CHECK(m.gate_time == doctest::Approx(1.374323854455699e-05).epsilon(1e-4));
    }
    SUBCASE("excited-manifold evaluator drops gamma_5 and uses g = 3.45") {
        DipoleConfig cfg = at(2e-9, 0.5e9);
        cfg.g_par = kMdeGFactor;
        cfg.g_perp = kMdeGFactor;
        GateMetrics m = evaluate_mde(cfg, emitter);
        CHECK(m.has_flag(flag::gamma5_dropped));
        CHECK(m.gate_time > 0.0);
    }
}

TEST_CASE("total gate time scales as r^3 once the interaction dominates") {
    DipoleConfig far = at(200e-9);
    DipoleConfig farther = at(400e-9);
    const MdTimes ta = md_times(far, dipolar_coupling(far).j_z);
    const MdTimes tb = md_times(farther, dipolar_coupling(farther).j_z);
    CHECK(tb.t_int / ta.t_int == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(tb.total / ta.total == doctest::Approx(8.0).epsilon(0.02));
}

TEST_CASE("off-resonant pulse infidelity") {
    CHECK(offresonant_infidelity(1.0, 3.0) ==
          doctest::Approx(1.7887356462342733e-06).epsilon(1e-12));
    CHECK(offresonant_infidelity(1.0, 4.0) ==
          doctest::Approx(3.000743840582101e-11).epsilon(1e-12));
    CHECK(offresonant_infidelity(0.7e6, 2.1e6) ==
          doctest::Approx(1.7887356462342733e-06).epsilon(1e-12));
    CHECK(offresonant_infidelity(1.0, 1e6) == doctest::Approx(0.0).epsilon(1e-300));

    // monotone decreasing in the ratio, bounded by (pi/2)^2
    double prev = (std::numbers::pi / 2) * (std::numbers::pi / 2) + 1e-12;
    for (double ratio = 0.0; ratio <= 6.0; ratio += 0.25) {
        const double v = offresonant_infidelity(1.0, ratio);
        CHECK(v <= prev);
        CHECK(v >= 0.0);
        prev = v;
    }
}

TEST_CASE("electric dipole frequency shift") {
    EdConfig cfg;

    SUBCASE("quoted point at 5 nm") {
        CHECK(ed_frequency_shift(cfg, 5e-9) ==
              doctest::Approx(218891719.85231853).epsilon(1e-9));
    }
    SUBCASE("distance where the shift equals three homogeneous linewidths") {
        const double r = 2.3644111590377778e-08;
        CHECK(ed_frequency_shift(cfg, r) == doctest::Approx(3.0 * 690e3).epsilon(1e-9));
    }
    SUBCASE("magic angle zeroes the shift") {
        cfg.orientation_factor = 0.0;
        CHECK(ed_frequency_shift(cfg, 5e-9) == 0.0);
    }
    SUBCASE("shift times r^3 is an exact constant") {
        const double k = ed_frequency_shift(cfg, 5e-9) * std::pow(5e-9, 3);
        for (double r : {2e-9, 9e-9, 31e-9, 100e-9}) {
            const double k2 = ed_frequency_shift(cfg, r) * r * r * r;
            CHECK(k2 == doctest::Approx(k).epsilon(1e-12));
        }
    }
    SUBCASE("two-component dipole moment reaches the same shift farther out") {
        EdConfig both = cfg;
        both.delta_mu = kDeltaMuBoth;
        // same Delta nu at a distance scaled by (55/49)^{2/3}
        const double scale = std::pow(kDeltaMuBoth / kDeltaMuY, 2.0 / 3.0);
        CHECK(ed_frequency_shift(both, 10e-9 * scale) ==
              doctest::Approx(ed_frequency_shift(cfg, 10e-9)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ed_frequency_shift(cfg, -1e-9), std::invalid_argument);
}

TEST_CASE("electric dipole gate time") {
    EdConfig cfg; // Omega_c = 562.5 MHz = Delta_e / 4

    CHECK(ed_gate_time(cfg, 2.19e8) == doctest::Approx(8.570980711280006e-08).epsilon(1e-12));
    // doubling Delta nu halves the second term
    const double t1 = ed_gate_time(cfg, 2.19e8) - 2.0 * std::numbers::pi / cfg.rabi_control;
    const double t2 = ed_gate_time(cfg, 4.38e8) - 2.0 * std::numbers::pi / cfg.rabi_control;
    CHECK(t1 / t2 == doctest::Approx(2.0).epsilon(1e-12));
    // Omega_c -> infinity leaves only the target-pulse term
    cfg.rabi_control = 1e30;
    CHECK(ed_gate_time(cfg, 2.19e8) ==
          doctest::Approx(3.0 * std::numbers::pi * std::sqrt(3.0) / 2.19e8).epsilon(1e-9));
}

TEST_CASE("electric dipole fidelity") {
    EmitterParams emitter = preset_scenario1().emitter;

    SUBCASE("clean limit") {
        EmitterParams clean;
        clean.gamma = 0.0;
        clean.gamma_star = 0.0;
        clean.t1_spin = 1e30;
        clean.t2_spin = 1e30;
        CHECK(ed_fidelity(clean, 1e-7, 2.19e8, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("full miss costs 43 pi^2/128") {
        EmitterParams clean;
        clean.gamma = 0.0;
        clean.gamma_star = 0.0;
        clean.t1_spin = 1e30;
        clean.t2_spin = 1e30;
        const double f = ed_fidelity(clean, 1e-7, 2.19e8, 2.19e8);
        CHECK(1.0 - f == doctest::Approx(3.315570228490956).epsilon(1e-12));
    }
    SUBCASE("fidelity decreases with distance") {
        EdConfig cfg;
        double prev = 1e300;
        for (double r = 5e-9; r <= 30e-9; r += 2.5e-9) {
            GateMetrics m = evaluate_ed(cfg, r, emitter);
            CHECK(m.fidelity < prev);
            prev = m.fidelity;
        }
    }
    SUBCASE("gate time scales as r^3 at large separation") {
        EdConfig cfg;
        cfg.rabi_control = 1e30;
        const double t1 = ed_gate_time(cfg, std::abs(ed_frequency_shift(cfg, 20e-9)));
        const double t2 = ed_gate_time(cfg, std::abs(ed_frequency_shift(cfg, 40e-9)));
        CHECK(t2 / t1 == doctest::Approx(8.0).epsilon(1e-9));
    }
}
