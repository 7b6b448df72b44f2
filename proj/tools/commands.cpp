#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "config_io.hpp"
#include "table_io.hpp"
#include "tqgate/errors.hpp"
#include "tqgate/evaluate.hpp"
#include "tqgate/interference.hpp"
#include "tqgate/oracle.hpp"
#include "tqgate/scattering.hpp"
#include "tqgate/sweep.hpp"

namespace tqgate::cli {

namespace {

ScenarioPreset load_base(const CommandOptions& opt) {
    if (opt.preset.empty() == opt.config_path.empty())
        throw std::invalid_argument("exactly one of --preset and --config is required");
    ScenarioPreset preset = opt.preset.empty()
                                ? load_config_file(opt.config_path, opt.raw_angular)
                                : load_preset(opt.preset);
    for (const auto& ov : parse_overrides(opt.sets))
        apply_override(preset, ov, opt.raw_angular);
    preset.validate();
    return preset;
}

AxisSpec make_axis(const std::string& vs, double from, double to, int points,
                   bool log_scale, bool raw_angular, double& display_scale) {
    AxisSpec axis;
    axis.parameter = resolve_parameter(vs);
    const double scale = input_scale(axis.parameter, raw_angular);
    display_scale = scale;
    axis.from = from * scale;
    axis.to = to * scale;
    axis.points = points;
    axis.scale = log_scale ? SweepScale::log : SweepScale::linear;
    return axis;
}

void append_metrics(std::vector<Cell>& row, const GateMetrics& m) {
    row.push_back(Cell::num(m.fidelity));
    row.push_back(Cell::num(m.efficiency));
    row.push_back(Cell::num(m.gate_time));
    row.push_back(Cell::str(join_flags(m.flags)));
}

void emit(const CommandOptions& opt, const OutputTable& table, std::ostream& out) {
    if (opt.format == "csv") write_csv(out, table);
    else if (opt.format == "json") write_json(out, table);
    else throw std::invalid_argument("unknown format: " + opt.format);
}

Scheme single_scheme(const CommandOptions& opt) {
    if (opt.schemes.size() != 1)
        throw std::invalid_argument("exactly one --scheme is required");
    return scheme_from_name(opt.schemes[0]);
}

int cmd_eval(const CommandOptions& opt, std::ostream& out) {
    const ScenarioPreset preset = load_base(opt);
    const Scheme scheme = single_scheme(opt);
    const GateMetrics m = evaluate_scheme(scheme, preset, preset.protocol);
    OutputTable table;
    table.header = {"param", "fidelity", "efficiency", "gate_time", "flags"};
    std::vector<Cell> row{Cell::str(scheme_name(scheme))};
    append_metrics(row, m);
    table.rows.push_back(std::move(row));
    emit(opt, table, out);
    return 0;
}

int cmd_sweep(const CommandOptions& opt, std::ostream& out) {
    const ScenarioPreset preset = load_base(opt);
    if (opt.vs.empty() || opt.points < 2)
        throw std::invalid_argument("sweep needs --vs, --from, --to, --points >= 2");
    SweepSpec spec;
    spec.scheme = single_scheme(opt);
    double scale1 = 1.0, scale2 = 1.0;
    spec.axis = make_axis(opt.vs, opt.from, opt.to, opt.points, opt.log_scale,
                          opt.raw_angular, scale1);
    if (!opt.vs2.empty())
        spec.axis2 = make_axis(opt.vs2, opt.from2, opt.to2, opt.points2,
                               opt.log2_scale, opt.raw_angular, scale2);

    const SweepResult res = run_sweep(spec, preset);
    OutputTable table;
    table.header = {"param"};
    if (res.has_param2) table.header.push_back("param2");
    table.header.insert(table.header.end(), {"fidelity", "efficiency", "gate_time", "flags"});
    for (const auto& r : res.rows) {
        std::vector<Cell> row{Cell::num(r.param / scale1)};
        if (res.has_param2) row.push_back(Cell::num(r.param2 / scale2));
        append_metrics(row, r.metrics);
        table.rows.push_back(std::move(row));
    }
    emit(opt, table, out);
    return 0;
}

int cmd_optimize(const CommandOptions& opt, std::ostream& out) {
    const ScenarioPreset preset = load_base(opt);
    if (single_scheme(opt) != Scheme::sb)
        throw std::invalid_argument("optimize supports --scheme sb");
    ScatteringConfig cfg;
    cfg.delta_p = preset.protocol.delta_p;
    cfg.delta_eps_a = preset.protocol.delta_eps_a;
    cfg.delta_eps_b = preset.protocol.delta_eps_b;
    cfg.g_over_kappa = preset.protocol.g_over_kappa;
    const double c = preset.cavity.cooperativity;

    const double sigma_closed = sb_sigma_opt_closed(c, preset.emitter, cfg.g_over_kappa);
    ScatteringConfig at_closed = cfg;
    at_closed.sigma_p = sigma_closed;
    const double f_closed = sb_fidelity(at_closed, c, preset.emitter);
    const SigmaOptimum num = sb_sigma_opt_numeric(c, preset.emitter, cfg);

    OutputTable table;
    table.header = {"sigma_closed_hz", "fidelity_closed", "sigma_numeric_hz",
                    "fidelity_numeric", "ratio", "flags"};
    std::vector<Cell> row{Cell::num(sigma_closed / two_pi), Cell::num(f_closed),
                          Cell::num(num.sigma_p / two_pi), Cell::num(num.fidelity),
                          Cell::num(num.sigma_p / sigma_closed),
                          Cell::str(num.endpoint ? flag::endpoint_argmax : "")};
    table.rows.push_back(std::move(row));
    emit(opt, table, out);
    return 0;
}

int cmd_compare(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    const ScenarioPreset preset = load_base(opt);
    if (opt.schemes.empty())
        throw std::invalid_argument("compare needs --schemes");
    if (opt.vs.empty() || opt.points < 2)
        throw std::invalid_argument("compare needs --vs, --from, --to, --points >= 2");
    std::vector<Scheme> schemes;
    for (const auto& name : opt.schemes) schemes.push_back(scheme_from_name(name));
    double scale = 1.0;
    const AxisSpec axis = make_axis(opt.vs, opt.from, opt.to, opt.points,
                                    opt.log_scale, opt.raw_angular, scale);
    const CompareTable table = compare_schemes(schemes, axis, preset);

    OutputTable output;
    output.header = {"param"};
    for (const auto& col : table.columns) {
        const std::string s = scheme_name(col.scheme);
        for (const char* metric : {"fidelity", "efficiency", "gate_time", "flags"})
            output.header.push_back(s + "_" + metric);
        if (col.skipped) err << "note: " << col.note << "\n";
    }
    for (std::size_t i = 0; i < table.param.size(); ++i) {
        std::vector<Cell> row{Cell::num(table.param[i] / scale)};
        for (const auto& col : table.columns) {
            if (col.skipped) {
                row.insert(row.end(), 3, Cell::none());
                row.push_back(Cell::str(flag::not_applicable));
            } else {
                append_metrics(row, col.metrics[i]);
            }
        }
        output.rows.push_back(std::move(row));
    }
    emit(opt, output, out);
    return 0;
}

struct DeviationSummary {
    double eff = 0.0;
    double fid = 0.0;
};

int cmd_oracle_check(const CommandOptions& opt, std::ostream& out) {
    const ScenarioPreset preset = load_base(opt);
    const Scheme scheme = single_scheme(opt);

    if (scheme == Scheme::sb) {
        // Surfaces the optimizer discrepancy: the numeric argmax sits at
        // 2^{-1/3} of the closed form, which balances the two competing
        // error terms instead of zeroing the derivative.
        const double expected_ratio = std::pow(2.0, -1.0 / 3.0);
        bool pass = true;
        out << "sigma_p optimizer check (numeric argmax vs closed form)\n";
        for (double c : {14.0, 74.0, 250.0, 1000.0}) {
            ScatteringConfig cfg;
            cfg.g_over_kappa = preset.protocol.g_over_kappa;
            const double closed = sb_sigma_opt_closed(c, preset.emitter, cfg.g_over_kappa);
            ScatteringConfig at_closed = cfg;
            at_closed.sigma_p = closed;
            const double f_closed = sb_fidelity(at_closed, c, preset.emitter);
            const SigmaOptimum num = sb_sigma_opt_numeric(c, preset.emitter, cfg);
            const double ratio = num.sigma_p / closed;
            const bool dominates = num.fidelity >= f_closed - 1e-12;
            const bool ratio_ok = std::abs(ratio / expected_ratio - 1.0) <= 1e-3;
            pass = pass && dominates && ratio_ok;
            out << "  C=" << c << " ratio=" << format_number(ratio)
                << " (expected 2^-1/3=" << format_number(expected_ratio)
                << ") dF=" << format_number(num.fidelity - f_closed) << "\n";
        }
        out << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? 0 : 2;
    }

    if (scheme != Scheme::ib && scheme != Scheme::ibf)
        throw std::invalid_argument("oracle-check supports --scheme ib, ibf or sb");

    std::vector<double> grid;
    if (opt.grid == "coarse") grid = {10e-9, 50e-9, 200e-9, 500e-9};
    else if (opt.grid == "fine")
        for (int i = 0; i < 8; ++i) grid.push_back(5e-9 * std::pow(200.0, i / 7.0));
    else throw std::invalid_argument("unknown grid: " + opt.grid);

    const double fid_tol = scheme == Scheme::ib ? 1e-4 : 1e-6;
    const double eff_tol = 1e-6;
    DeviationSummary worst;
    out << "oracle equivalence (" << scheme_name(scheme) << ", preset " << preset.name
        << ", fidelity tolerance " << format_number(fid_tol) << ")\n";
    for (bool zero_spin : {true, false}) {
        ScenarioPreset p = preset;
        if (zero_spin) p.emitter.t2_spin = 2.0 * p.emitter.t1_spin; // gamma*_s = 0
        for (double td : grid) {
            InterferenceConfig cfg;
            cfg.detection_time = td;
            cfg.delta_t = p.delta_t;
            double eff_cf, fid_cf;
            OracleResult sim;
            if (scheme == Scheme::ib) {
                eff_cf = ib_efficiency(cfg, p.cavity, p.detection);
                fid_cf = ib_fidelity(cfg, p.cavity, p.emitter);
                sim = simulate_ib(p.emitter, p.cavity, p.detection, td, p.delta_t);
            } else {
                eff_cf = ibf_efficiency(cfg, p.cavity, p.detection);
                fid_cf = ibf_fidelity(cfg, p.cavity, p.emitter);
                sim = simulate_ibf(p.emitter, p.cavity, p.detection, td, p.delta_t);
            }
            const double de = std::abs(sim.efficiency - eff_cf) / eff_cf;
            const double df = std::abs(sim.fidelity - fid_cf) / fid_cf;
            worst.eff = std::max(worst.eff, de);
            worst.fid = std::max(worst.fid, df);
            out << "  Td=" << format_number(td) << " gss=" << (zero_spin ? "0" : "preset")
                << " eff_dev=" << format_number(de) << " fid_dev=" << format_number(df)
                << "\n";
        }
    }
    out << "max relative deviation: efficiency=" << format_number(worst.eff)
        << " fidelity=" << format_number(worst.fid) << "\n";
    const bool pass = worst.eff <= eff_tol && worst.fid <= fid_tol;
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 2;
}

} // namespace

int run_command(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.output_path.empty()) {
        file.open(opt.output_path);
        if (!file) throw std::invalid_argument("cannot open output: " + opt.output_path);
        sink = &file;
    }
    if (opt.verb == "eval") return cmd_eval(opt, *sink);
    if (opt.verb == "sweep") return cmd_sweep(opt, *sink);
    if (opt.verb == "optimize") return cmd_optimize(opt, *sink);
    if (opt.verb == "compare") return cmd_compare(opt, *sink, err);
    if (opt.verb == "oracle-check") return cmd_oracle_check(opt, *sink);
    throw std::invalid_argument("unknown verb: " + opt.verb);
}

} // namespace tqgate::cli
