#include "tqgate/dipole.hpp"

#include <cmath>
#include <stdexcept>

namespace tqgate {

namespace {
constexpr double pi = std::numbers::pi;
}

DipoleCoupling dipolar_coupling(const DipoleConfig& cfg, const PhysConsts& consts) {
    if (cfg.distance <= 0.0)
        throw std::invalid_argument("dipolar_coupling: r must be > 0");
    const double r3 = cfg.distance * cfg.distance * cfg.distance;
    const double mz = consts.muB * cfg.g_par;
    const double mt = consts.muB * cfg.g_perp;
    DipoleCoupling j;
    j.j_z = consts.mu0 * mz * mz / (8.0 * pi * r3);
    j.j_x = consts.mu0 * mt * mt / (16.0 * pi * r3);
    j.j_y = j.j_x;
    return j;
}

MdTimes md_times(const DipoleConfig& cfg, double j_z, const PhysConsts& consts) {
    if (cfg.rabi <= 0.0)
        throw std::invalid_argument("md_times: Omega must be > 0");
    if (j_z <= 0.0)
        throw std::invalid_argument("md_times: J_z must be > 0");
    MdTimes t;
    t.t_act = pi / cfg.rabi;
    t.t_int = consts.hbar * pi / (4.0 * j_z);
    t.total = 2.0 * t.t_act + t.t_int;
    return t;
}

double md_fidelity(const DipoleRates& rates, const MdTimes& times, const DipoleCoupling& j) {
    if (j.j_z <= 0.0)
        throw std::invalid_argument("md_fidelity: J_z must be > 0");
    const double a = (32.0 * (2.0 - std::sqrt(2.0)) - pi * pi) / 64.0;
    const double g1 = rates.gamma_1_up + rates.gamma_1_dn;
    const double transverse = (j.j_x + j.j_y) / j.j_z;
    return 1.0 -
           times.t_act * (7.0 / 8.0 * g1 + 13.0 / 16.0 * (rates.gamma_2 + rates.gamma_3) +
                          0.5 * (rates.gamma_4 + rates.gamma_5)) -
           times.t_int * (g1 + 0.75 * rates.gamma_3 + 0.5 * rates.gamma_5) -
           a * transverse * transverse;
}

double offresonant_infidelity(double rabi, double splitting) {
    if (rabi <= 0.0)
        throw std::invalid_argument("offresonant_infidelity: Omega must be > 0");
    const double x = splitting / rabi;
    return (pi / 2.0) * (pi / 2.0) * std::exp(-(pi / 2.0) * x * x);
}

namespace {

void check_branching(double allowed, double forbidden) {
    if (allowed < 0.0 || forbidden < 0.0 || allowed + forbidden > 1.0 + 1e-12)
        throw std::invalid_argument("branching fractions must be >= 0 and sum <= 1");
}

} // namespace

DipoleRates mdg_rates(const EmitterParams& emitter, double branching_allowed,
                      double branching_forbidden) {
    check_branching(branching_allowed, branching_forbidden);
    DipoleRates r;
    const double active_decay = 1.0 / emitter.t1_spin;
    r.gamma_1_up = branching_forbidden * active_decay; // forbidden cross branch
    r.gamma_1_dn = branching_allowed * active_decay;
    r.gamma_2 = 0.0; // nuclear pair, no measured rates
    r.gamma_3 = 0.0;
    r.gamma_4 = 0.0;
    r.gamma_5 = emitter.gamma_s_star();
    return r;
}

DipoleRates mde_rates(const EmitterParams& emitter, double active_decay_time,
                      double branching_allowed, double branching_forbidden) {
    check_branching(branching_allowed, branching_forbidden);
    DipoleRates r;
    const double active_decay = 1.0 / active_decay_time;
    r.gamma_1_up = branching_forbidden * active_decay;
    r.gamma_1_dn = branching_allowed * active_decay;
    r.gamma_2 = 1.0 / emitter.t1_spin;
    r.gamma_3 = 0.0;
    r.gamma_4 = emitter.gamma_s_star();
    r.gamma_5 = 0.0; // no measured hole-spin dephasing rate
    return r;
}

double ed_frequency_shift(const EdConfig& cfg, double distance, const PhysConsts& consts) {
    if (distance <= 0.0)
        throw std::invalid_argument("ed_frequency_shift: r must be > 0");
    if (std::abs(cfg.orientation_factor) > 2.0)
        throw std::invalid_argument("ed_frequency_shift: |orientation factor| <= 2");
    const double eps = cfg.refractive_index * cfg.refractive_index;
    const double r3 = distance * distance * distance;
    return cfg.delta_mu * cfg.delta_mu * cfg.orientation_factor /
           (4.0 * pi * eps * consts.eps0 * consts.h * r3);
}

double ed_gate_time(const EdConfig& cfg, double delta_nu) {
    if (delta_nu <= 0.0)
        throw std::invalid_argument("ed_gate_time: Delta nu must be > 0");
    if (cfg.rabi_control <= 0.0)
        throw std::invalid_argument("ed_gate_time: Omega_c must be > 0");
    return 2.0 * pi / cfg.rabi_control + 3.0 * pi * std::sqrt(3.0) / delta_nu;
}

double ed_fidelity(const EmitterParams& emitter, double t_ed, double delta_nu,
                   double delta_nu_error) {
    if (delta_nu <= 0.0)
        throw std::invalid_argument("ed_fidelity: Delta nu must be > 0");
    const double chi = emitter.spin_decoherence();
    const double miss = delta_nu_error / delta_nu;
    return 1.0 -
           t_ed / 80.0 * (42.0 * emitter.gamma + 25.0 * emitter.gamma_star + 25.0 * chi) -
           43.0 * pi * pi / 128.0 * miss * miss;
}

GateMetrics evaluate_mdg(const DipoleConfig& cfg, const EmitterParams& emitter) {
    GateMetrics m;
    const DipoleCoupling j = dipolar_coupling(cfg);
    const MdTimes t = md_times(cfg, j.j_z);
    const DipoleRates rates =
        mdg_rates(emitter, cfg.branching_allowed, cfg.branching_forbidden);
    m.add_flag(flag::nuclear_rates_default);
    m.set_checked(md_fidelity(rates, t, j), 1.0, t.total);
    return m;
}

GateMetrics evaluate_mde(const DipoleConfig& cfg, const EmitterParams& emitter) {
    GateMetrics m;
    const DipoleCoupling j = dipolar_coupling(cfg);
    const MdTimes t = md_times(cfg, j.j_z);
    const DipoleRates rates =
        mde_rates(emitter, 100e-9, cfg.branching_allowed, cfg.branching_forbidden);
    m.add_flag(flag::gamma5_dropped);
    m.set_checked(md_fidelity(rates, t, j), 1.0, t.total);
    return m;
}

GateMetrics evaluate_ed(const EdConfig& cfg, double distance, const EmitterParams& emitter) {
    GateMetrics m;
    const double dnu = std::abs(ed_frequency_shift(cfg, distance));
    const double t = ed_gate_time(cfg, dnu);
    m.set_checked(ed_fidelity(emitter, t, dnu, cfg.delta_nu_error), 1.0, t);
    return m;
}

} // namespace tqgate
