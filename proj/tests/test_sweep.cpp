#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdlib>

#include "tqgate/scattering.hpp"
#include "tqgate/sweep.hpp"

using namespace tqgate;

TEST_CASE("golden section on a parabola") {
    GoldenResult r = golden_section_max([](double x) { return -(x - 3.0) * (x - 3.0); },
                                        0.0, 10.0, 1e-9);
    CHECK(r.argmax == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_FALSE(r.endpoint);
}

TEST_CASE("golden section flags an endpoint argmax") {
    GoldenResult r = golden_section_max([](double x) { return x; }, 0.0, 1.0, 1e-9);
    CHECK(r.endpoint);
    CHECK(r.argmax == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("golden section matches a dense grid on the scattering objective") {
    EmitterParams e = preset_scenario2().emitter;
    e.gamma_star = 0.0;
    ScatteringConfig cfg;
    auto objective = [&](double ln_sigma) {
        ScatteringConfig probe = cfg;
        probe.sigma_p = std::exp(ln_sigma);
        return sb_fidelity(probe, 74.0, e);
    };
    const double center = std::log(sb_sigma_opt_closed(74.0, e, cfg.g_over_kappa));
    GoldenResult r = golden_section_max(objective, center - 4.0, center + 4.0, 1e-12);

    // two-stage grid scan: global over four decades, then zoomed to reach
    // 1e-6 relative resolution around the maximum
    auto grid_argmax = [&](double lo, double hi, int n) {
        double best_x = lo, best_f = -1e300;
        for (int i = 0; i < n; ++i) {
            const double x = lo + (hi - lo) * i / (n - 1);
            const double f = objective(x);
            if (f > best_f) {
                best_f = f;
                best_x = x;
            }
        }
        return best_x;
    };
    const double coarse = grid_argmax(center - 4.0, center + 4.0, 100001);
    CHECK(std::exp(r.argmax) == doctest::Approx(std::exp(coarse)).epsilon(2e-4));
    const double fine = grid_argmax(coarse - 1e-3, coarse + 1e-3, 100001);
    CHECK(std::exp(r.argmax) == doctest::Approx(std::exp(fine)).epsilon(1e-6));
}

TEST_CASE("parameter paths resolve and reject unknowns") {
    CHECK(resolve_parameter("cooperativity") == "cavity.cooperativity");
    CHECK(resolve_parameter("detection_time") == "scheme.detection_time");
    CHECK(resolve_parameter("emitter.gamma_star") == "emitter.gamma_star");
    CHECK_THROWS_AS(resolve_parameter("no_such_knob"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_parameter("scheme.no_such_knob"), std::invalid_argument);

    ScenarioPreset p = preset_scenario1();
    ProtocolConfig c = p.protocol;
    apply_parameter(p, c, "cooperativity", 30.0);
    CHECK(p.cavity.cooperativity == 30.0);
    CHECK(p.cavity.gamma_prime == doctest::Approx(p.emitter.gamma * 31.0).epsilon(1e-12));
    apply_parameter(p, c, "detection_time", 42e-9);
    CHECK(c.detection_time == 42e-9);
}

TEST_CASE("axis validation") {
    AxisSpec axis;
    axis.parameter = "scheme.detection_time";
    axis.from = 1e-9;
    axis.to = 1e-6;
    axis.points = 1;
    CHECK_THROWS_AS(axis_values(axis), std::invalid_argument);
    axis.points = 10;
    axis.from = 1e-6;
    axis.to = 1e-9;
    CHECK_THROWS_AS(axis_values(axis), std::invalid_argument);
    axis.from = 0.0;
    axis.to = 1e-6;
    axis.scale = SweepScale::log;
    CHECK_THROWS_AS(axis_values(axis), std::invalid_argument);
    axis.from = 1e-9;
    const auto vals = axis_values(axis);
    CHECK(vals.size() == 10);
    CHECK(vals.front() == doctest::Approx(1e-9).epsilon(1e-15));
    CHECK(vals.back() == 1e-6);
}

TEST_CASE("ib fidelity sweep is monotone nonincreasing in detection time") {
    SweepSpec spec;
    spec.scheme = Scheme::ib;
    spec.axis = {"scheme.detection_time", 1e-9, 10e-6, 100, SweepScale::log};
    SweepResult res = run_sweep(spec, preset_scenario1());
    REQUIRE(res.rows.size() == 100);
    for (std::size_t i = 1; i < res.rows.size(); ++i)
        CHECK(res.rows[i].metrics.fidelity <= res.rows[i - 1].metrics.fidelity + 1e-15);
}

TEST_CASE("sb fidelity sweep reproduces the cooperativity ordering") {
    // higher C gives higher fidelity pointwise across the dephasing range
    std::vector<std::vector<double>> curves;
    for (double c : {14.0, 74.0, 250.0, 1000.0}) {
        SweepSpec spec;
        spec.scheme = Scheme::sb;
        spec.axis = {"emitter.gamma_star", two_pi * 0.1e6, two_pi * 10e6, 12,
                     SweepScale::log};
        spec.overrides = {{"cavity.cooperativity", c}};
        SweepResult res = run_sweep(spec, preset_scenario2());
        std::vector<double> f;
        for (const auto& row : res.rows) f.push_back(row.metrics.fidelity);
        curves.push_back(std::move(f));
    }
    for (std::size_t ci = 1; ci < curves.size(); ++ci)
        for (std::size_t i = 0; i < curves[ci].size(); ++i)
            CHECK(curves[ci][i] > curves[ci - 1][i]);
}

TEST_CASE("sweeps are deterministic and parallelism-independent") {
    SweepSpec spec;
    spec.scheme = Scheme::ibf;
    spec.axis = {"scheme.detection_time", 1e-9, 1e-6, 64, SweepScale::log};
    spec.overrides = {{"emitter.gamma_star", two_pi * 1e6}};

    setenv("TQGATE_THREADS", "1", 1);
    SweepResult serial = run_sweep(spec, preset_scenario2());
    setenv("TQGATE_THREADS", "8", 1);
    SweepResult parallel = run_sweep(spec, preset_scenario2());
    SweepResult again = run_sweep(spec, preset_scenario2());
    unsetenv("TQGATE_THREADS");

    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        // bit-identical across runs and schedules
        CHECK(serial.rows[i].param == parallel.rows[i].param);
        CHECK(serial.rows[i].metrics.fidelity == parallel.rows[i].metrics.fidelity);
        CHECK(serial.rows[i].metrics.efficiency == parallel.rows[i].metrics.efficiency);
        CHECK(parallel.rows[i].metrics.fidelity == again.rows[i].metrics.fidelity);
    }
}

TEST_CASE("empty override set degenerates to a pointwise eval") {
    SweepSpec spec;
    spec.scheme = Scheme::ibf;
    spec.axis = {"scheme.detection_time", 10e-9, 20e-9, 2, SweepScale::linear};
    SweepResult res = run_sweep(spec, preset_scenario2());

    ScenarioPreset p = preset_scenario2();
    ProtocolConfig c = p.protocol;
    c.detection_time = 10e-9;
    GateMetrics direct = evaluate_scheme(Scheme::ibf, p, c);
    CHECK(res.rows[0].metrics.fidelity == direct.fidelity);
    CHECK(res.rows[0].metrics.efficiency == direct.efficiency);
}

TEST_CASE("two-dimensional sweeps enumerate the product grid") {
    SweepSpec spec;
    spec.scheme = Scheme::ibf;
    spec.axis = {"scheme.detection_time", 10e-9, 20e-9, 3, SweepScale::linear};
    spec.axis2 = AxisSpec{"scheme.delta_t", 1e-9, 2e-9, 2, SweepScale::linear};
    SweepResult res = run_sweep(spec, preset_scenario2());
    REQUIRE(res.rows.size() == 6);
    CHECK(res.has_param2);
    CHECK(res.rows[0].param == doctest::Approx(10e-9));
    CHECK(res.rows[0].param2 == doctest::Approx(1e-9));
    CHECK(res.rows[1].param == doctest::Approx(10e-9));
    CHECK(res.rows[1].param2 == doctest::Approx(2e-9));
}

TEST_CASE("compare covers the interference crossover and skips bad axes") {
    AxisSpec axis{"cavity.cooperativity", 1.0, 120.0, 40, SweepScale::linear};
    CompareTable table = compare_schemes({Scheme::ib, Scheme::ibf, Scheme::mdg}, axis,
                                         preset_scenario2(),
                                         {{"scheme.detection_time", 10e-9}});
    REQUIRE(table.columns.size() == 3);
    CHECK_FALSE(table.columns[0].skipped);
    CHECK_FALSE(table.columns[1].skipped);
    CHECK(table.columns[2].skipped); // mdg has no cooperativity axis
    CHECK(table.columns[2].note.find("not applicable") != std::string::npos);

    // ibf dominates ib in efficiency below C = 50 at this detection time
    for (std::size_t i = 0; i < table.param.size(); ++i) {
        if (table.param[i] < 50.0)
            CHECK(table.columns[1].metrics[i].efficiency >
                  table.columns[0].metrics[i].efficiency);
    }
    // flags survive into comparison columns
    CompareTable flagged = compare_schemes(
        {Scheme::sb}, AxisSpec{"cavity.cooperativity", 1.0, 2.0, 3, SweepScale::linear},
        preset_scenario2());
    for (const auto& m : flagged.columns[0].metrics)
        CHECK(m.has_flag(flag::efficiency_clamped));
}

TEST_CASE("ibf fidelity dominates ib pointwise across the dephasing range") {
    AxisSpec axis{"emitter.gamma_star", two_pi * 0.1e6, two_pi * 10e6, 25, SweepScale::log};
    CompareTable table = compare_schemes({Scheme::ib, Scheme::ibf}, axis,
                                         preset_scenario2(),
                                         {{"scheme.detection_time", 10e-9}});
    for (std::size_t i = 0; i < table.param.size(); ++i)
        CHECK(table.columns[1].metrics[i].fidelity >=
              table.columns[0].metrics[i].fidelity);
}

TEST_CASE("single-scheme compare degenerates to a sweep") {
    AxisSpec axis{"scheme.detection_time", 1e-9, 1e-7, 10, SweepScale::log};
    CompareTable table = compare_schemes({Scheme::ibf}, axis, preset_scenario2());
    SweepSpec spec;
    spec.scheme = Scheme::ibf;
    spec.axis = axis;
    SweepResult sweep = run_sweep(spec, preset_scenario2());
    for (std::size_t i = 0; i < sweep.rows.size(); ++i)
        CHECK(table.columns[0].metrics[i].fidelity == sweep.rows[i].metrics.fidelity);
}
