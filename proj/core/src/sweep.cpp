#include "tqgate/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tqgate/errors.hpp"

namespace tqgate {

GoldenResult golden_section_max(const std::function<double(double)>& objective,
                                double lo, double hi, double tol, int max_iter) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("golden_section_max: invalid bracket");
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    GoldenResult res;
    for (res.iterations = 0; b - a > tol; ++res.iterations) {
        if (res.iterations >= max_iter)
            throw numerical_error("golden_section_max: no convergence after max iterations");
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = objective(d);
        }
    }
    res.argmax = 0.5 * (a + b);
    res.value = objective(res.argmax);
    // An argmax pinned to a bracket edge means the maximum lies outside.
    const double span = hi - lo;
    const double edge = std::max(tol, 1e-12 * span) * 4.0;
    if (res.argmax - lo < edge || hi - res.argmax < edge ||
        objective(lo) >= res.value || objective(hi) >= res.value)
        res.endpoint = true;
    return res;
}

namespace {

struct ParamEntry {
    std::function<void(ScenarioPreset&, ProtocolConfig&, double)> set;
};

// Setting C (or g, kappa) re-derives gamma', F_p and eta_em while keeping
// the emitter's bare decay rate, which is how the cooperativity sweeps of
// the comparison figures are defined.
void set_cooperativity(ScenarioPreset& p, double c) {
    p.cavity = derive_cavity_from_c(c, p.emitter);
}

const std::map<std::string, ParamEntry>& registry() {
    static const std::map<std::string, ParamEntry> table = [] {
        std::map<std::string, ParamEntry> t;
        auto emitter = [&](const std::string& name, double EmitterParams::* field) {
            t["emitter." + name] = {[field](ScenarioPreset& p, ProtocolConfig&, double v) {
                p.emitter.*field = v;
            }};
        };
        emitter("gamma", &EmitterParams::gamma);
        emitter("gamma_star", &EmitterParams::gamma_star);
        emitter("t1_spin", &EmitterParams::t1_spin);
        emitter("t2_spin", &EmitterParams::t2_spin);
        emitter("eta_zpl", &EmitterParams::eta_zpl);
        emitter("eta_r", &EmitterParams::eta_r);
        t["cavity.cooperativity"] = {[](ScenarioPreset& p, ProtocolConfig&, double v) {
            set_cooperativity(p, v);
        }};
        t["cavity.g"] = {[](ScenarioPreset& p, ProtocolConfig&, double v) {
            const double kappa = p.cavity.kappa;
            if (std::isnan(kappa))
                throw std::invalid_argument("cavity.g: kappa not set on this preset");
            p.cavity = derive_cavity(v, kappa, p.emitter);
        }};
        t["cavity.kappa"] = {[](ScenarioPreset& p, ProtocolConfig&, double v) {
            const double g = p.cavity.g_coupling;
            if (std::isnan(g))
                throw std::invalid_argument("cavity.kappa: g not set on this preset");
            p.cavity = derive_cavity(g, v, p.emitter);
        }};
        t["detection.eta_d"] = {[](ScenarioPreset& p, ProtocolConfig&, double v) {
            p.detection.eta_d = v;
        }};
        t["detection.eta_c"] = {[](ScenarioPreset& p, ProtocolConfig&, double v) {
            p.detection.eta_c = v;
        }};
        auto scheme = [&](const std::string& name, double ProtocolConfig::* field) {
            t["scheme." + name] = {[field](ScenarioPreset&, ProtocolConfig& c, double v) {
                c.*field = v;
            }};
        };
        scheme("detection_time", &ProtocolConfig::detection_time);
        scheme("delta_t", &ProtocolConfig::delta_t);
        scheme("delta", &ProtocolConfig::delta);
        scheme("phi_init", &ProtocolConfig::phi_init);
        scheme("phi_prop", &ProtocolConfig::phi_prop);
        scheme("sigma_p", &ProtocolConfig::sigma_p);
        scheme("delta_p", &ProtocolConfig::delta_p);
        scheme("delta_eps_a", &ProtocolConfig::delta_eps_a);
        scheme("delta_eps_b", &ProtocolConfig::delta_eps_b);
        scheme("g_over_kappa", &ProtocolConfig::g_over_kappa);
        scheme("distance", &ProtocolConfig::distance);
        scheme("rabi", &ProtocolConfig::rabi);
        scheme("splitting", &ProtocolConfig::splitting);
        scheme("branching_allowed", &ProtocolConfig::branching_allowed);
        scheme("branching_forbidden", &ProtocolConfig::branching_forbidden);
        scheme("delta_mu", &ProtocolConfig::delta_mu);
        scheme("refractive_index", &ProtocolConfig::refractive_index);
        scheme("orientation_factor", &ProtocolConfig::orientation_factor);
        scheme("rabi_control", &ProtocolConfig::rabi_control);
        scheme("delta_nu_error", &ProtocolConfig::delta_nu_error);
        scheme("delta_eps", &ProtocolConfig::delta_eps);
        scheme("delta_eg", &ProtocolConfig::delta_eg);
        scheme("two_photon_error", &ProtocolConfig::two_photon_error);
        scheme("cavity_detuning", &ProtocolConfig::cavity_detuning);
        scheme("delta_over_rabi", &ProtocolConfig::delta_over_rabi);
        scheme("shelving_gamma", &ProtocolConfig::shelving_gamma);
        return t;
    }();
    return table;
}

std::string resolve_path(const std::string& path) {
    const auto& table = registry();
    if (table.count(path)) return path;
    // bare field name: accept when unique across sections
    std::string match;
    for (const auto& [key, entry] : table) {
        const auto dot = key.find('.');
        if (key.substr(dot + 1) == path) {
            if (!match.empty())
                throw std::invalid_argument("ambiguous parameter: " + path);
            match = key;
        }
    }
    if (match.empty())
        throw std::invalid_argument("unknown parameter: " + path);
    return match;
}

int worker_count(std::size_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("TQGATE_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = static_cast<unsigned>(cap);
    }
    if (n < 1) n = 1;
    return static_cast<int>(std::min<std::size_t>(n, jobs));
}

} // namespace

void apply_parameter(ScenarioPreset& preset, ProtocolConfig& protocol,
                     const std::string& path, double value) {
    registry().at(resolve_path(path)).set(preset, protocol, value);
}

std::vector<std::string> known_parameters() {
    std::vector<std::string> out;
    for (const auto& [key, entry] : registry()) out.push_back(key);
    return out;
}

std::string resolve_parameter(const std::string& path) { return resolve_path(path); }

bool parameter_applies(Scheme scheme, const std::string& path) {
    const std::string full = resolve_path(path);
    const std::string field = full.substr(full.find('.') + 1);
    const bool cavity_scheme = scheme == Scheme::ib || scheme == Scheme::ibf ||
                               scheme == Scheme::sb || scheme == Scheme::vp ||
                               scheme == Scheme::rvp;
    if (full.rfind("cavity.", 0) == 0) return cavity_scheme;
    if (full.rfind("detection.", 0) == 0)
        return scheme == Scheme::ib || scheme == Scheme::ibf || scheme == Scheme::sb;
    if (full.rfind("emitter.", 0) == 0) {
        if (field == "gamma_star")
            return cavity_scheme || scheme == Scheme::ed;
        if (field == "eta_zpl" || field == "eta_r") return cavity_scheme;
        return true;
    }
    // scheme knobs
    static const std::map<std::string, std::vector<Scheme>> owners = {
        {"detection_time", {Scheme::ib, Scheme::ibf}},
        {"delta_t", {Scheme::ib, Scheme::ibf}},
        {"delta", {Scheme::ibf}},
        {"phi_init", {Scheme::ibf}},
        {"phi_prop", {Scheme::ibf}},
        {"sigma_p", {Scheme::sb}},
        {"delta_p", {Scheme::sb}},
        {"delta_eps_a", {Scheme::sb}},
        {"delta_eps_b", {Scheme::sb}},
        {"g_over_kappa", {Scheme::sb, Scheme::vp}},
        {"distance", {Scheme::mdg, Scheme::mde, Scheme::ed}},
        {"rabi", {Scheme::mdg, Scheme::mde}},
        {"splitting", {Scheme::mdg, Scheme::mde}},
        {"branching_allowed", {Scheme::mdg, Scheme::mde}},
        {"branching_forbidden", {Scheme::mdg, Scheme::mde}},
        {"delta_mu", {Scheme::ed}},
        {"refractive_index", {Scheme::ed}},
        {"orientation_factor", {Scheme::ed}},
        {"rabi_control", {Scheme::ed}},
        {"delta_nu_error", {Scheme::ed}},
        {"delta_eps", {Scheme::vp, Scheme::rvp}},
        {"delta_eg", {Scheme::vp}},
        {"two_photon_error", {Scheme::rvp}},
        {"cavity_detuning", {Scheme::rvp}},
        {"delta_over_rabi", {Scheme::rvp}},
        {"shelving_gamma", {Scheme::rvp}},
    };
    const auto it = owners.find(field);
    if (it == owners.end()) return false;
    for (Scheme s : it->second)
        if (s == scheme) return true;
    return false;
}

std::vector<double> axis_values(const AxisSpec& axis) {
    if (axis.points < 2)
        throw std::invalid_argument("axis: points must be >= 2");
    if (!(axis.from < axis.to))
        throw std::invalid_argument("axis: from < to required");
    if (axis.scale == SweepScale::log && axis.from <= 0.0)
        throw std::invalid_argument("axis: log scale requires from > 0");
    std::vector<double> vals(axis.points);
    if (axis.scale == SweepScale::linear) {
        const double step = (axis.to - axis.from) / (axis.points - 1);
        for (int i = 0; i < axis.points; ++i) vals[i] = axis.from + step * i;
    } else {
        const double la = std::log(axis.from), lb = std::log(axis.to);
        const double step = (lb - la) / (axis.points - 1);
        for (int i = 0; i < axis.points; ++i) vals[i] = std::exp(la + step * i);
    }
    vals.back() = axis.to;
    return vals;
}

namespace {

// Evaluates jobs 0..n-1 concurrently, writing results positionally.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& job) {
    const int workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace

SweepResult run_sweep(const SweepSpec& spec, const ScenarioPreset& base) {
    ScenarioPreset preset = base;
    ProtocolConfig protocol = base.protocol;
    for (const auto& [path, value] : spec.overrides)
        apply_parameter(preset, protocol, path, value);

    const std::vector<double> v1 = axis_values(spec.axis);
    std::vector<double> v2;
    if (spec.axis2) v2 = axis_values(*spec.axis2);

    SweepResult result;
    result.has_param2 = spec.axis2.has_value();
    const std::size_t n = v1.size() * std::max<std::size_t>(1, v2.size());
    result.rows.resize(n);

    parallel_for(n, [&](std::size_t i) {
        ScenarioPreset p = preset;
        ProtocolConfig c = protocol;
        SweepRow& row = result.rows[i];
        if (spec.axis2) {
            const std::size_t i1 = i / v2.size(), i2 = i % v2.size();
            row.param = v1[i1];
            row.param2 = v2[i2];
            apply_parameter(p, c, spec.axis.parameter, row.param);
            apply_parameter(p, c, spec.axis2->parameter, row.param2);
        } else {
            row.param = v1[i];
            apply_parameter(p, c, spec.axis.parameter, row.param);
        }
        row.metrics = evaluate_scheme(spec.scheme, p, c);
    });
    return result;
}

CompareTable compare_schemes(const std::vector<Scheme>& schemes, const AxisSpec& axis,
                             const ScenarioPreset& base,
                             const std::vector<std::pair<std::string, double>>& overrides) {
    CompareTable table;
    table.param = axis_values(axis);
    for (Scheme s : schemes) {
        CompareColumn col;
        col.scheme = s;
        if (!parameter_applies(s, axis.parameter)) {
            col.skipped = true;
            col.note = scheme_name(s) + ": axis " + axis.parameter + " not applicable";
        } else {
            SweepSpec spec;
            spec.scheme = s;
            spec.axis = axis;
            spec.overrides = overrides;
            SweepResult r = run_sweep(spec, base);
            col.metrics.reserve(r.rows.size());
            for (auto& row : r.rows) col.metrics.push_back(std::move(row.metrics));
        }
        table.columns.push_back(std::move(col));
    }
    return table;
}

} // namespace tqgate
