#include "tqgate/exchange.hpp"

#include <cmath>
#include <stdexcept>

namespace tqgate {

namespace {
constexpr double pi = std::numbers::pi;

double rvp_shelving_gamma(const ExchangeConfig& cfg, const EmitterParams& emitter) {
    // No stated rate for the nuclear shelving levels; 1/T2e passes through
    // unless the config overrides it.
    return std::isnan(cfg.shelving_gamma) ? emitter.spin_decoherence() : cfg.shelving_gamma;
}

} // namespace

double vp_gate_time(double cooperativity, double gamma) {
    if (cooperativity <= 0.0)
        throw std::invalid_argument("vp_gate_time: C must be > 0");
    if (gamma <= 0.0)
        throw std::invalid_argument("vp_gate_time: gamma must be > 0");
    return two_pi / (gamma * std::sqrt(cooperativity));
}

double vp_fidelity(const ExchangeConfig& cfg, double cooperativity,
                   const EmitterParams& emitter, double t_vp) {
    if (cooperativity <= 0.0)
        throw std::invalid_argument("vp_fidelity: C must be > 0");
    if (cfg.delta_eg == 0.0)
        throw std::invalid_argument("vp_fidelity: delta_eg must be nonzero");
    const double big_gamma = emitter.spin_decoherence();
    const double a = t_vp * cfg.delta_eps / two_pi;
    const double b = two_pi / (t_vp * cfg.delta_eg);
    return 1.0 - two_pi / std::sqrt(cooperativity) - big_gamma * t_vp -
           0.58 * t_vp * emitter.gamma_star -
           (6.0 * pi * pi / 32.0) * (a * a + b * b - 12.0 / cooperativity);
}

double effective_cooperativity(double cooperativity, double t1h, double t2h) {
    if (t1h <= 0.0 || t2h <= 0.0)
        throw std::invalid_argument("effective_cooperativity: times must be > 0");
    if (t2h > 2.0 * t1h + 1e-30)
        throw std::invalid_argument("effective_cooperativity: T2h <= 2 T1h required");
    return cooperativity / (1.0 + 0.7 * (t1h / t2h - 1.0));
}

double rvp_gate_time(double c_eff, double gamma, double delta_over_rabi) {
    if (delta_over_rabi < 1.0)
        throw std::invalid_argument("rvp_gate_time: Delta/Omega must be >= 1");
    return delta_over_rabi * delta_over_rabi * vp_gate_time(c_eff, gamma);
}

double rvp_fidelity(const ExchangeConfig& cfg, double c_eff,
                    const EmitterParams& emitter, double t_rvp) {
    if (c_eff <= 0.0)
        throw std::invalid_argument("rvp_fidelity: C_eff must be > 0");
    double mismatch = 0.0;
    if (cfg.delta_eps != 0.0) {
        if (cfg.cavity_detuning == 0.0)
            throw std::invalid_argument("rvp_fidelity: Delta = 0 with Delta_eps != 0");
        mismatch = cfg.delta_eps / cfg.cavity_detuning;
    }
    const double big_gamma = rvp_shelving_gamma(cfg, emitter);
    const double a = t_rvp * cfg.two_photon_error / two_pi;
    return 1.0 - two_pi / std::sqrt(c_eff) - big_gamma * t_rvp -
           (pi * pi / 8.0) * (a * a + mismatch * mismatch - 18.0 / c_eff);
}

GateMetrics evaluate_vp(const ExchangeConfig& cfg, double cooperativity,
                        const EmitterParams& emitter, double g_over_kappa) {
    GateMetrics m;
    const double t = vp_gate_time(cooperativity, emitter.gamma);
    if (t > emitter.t1_optical()) m.add_flag(flag::slow_gate);
    if (g_over_kappa > 1.0) m.add_flag(flag::strong_coupling);
    m.set_checked(vp_fidelity(cfg, cooperativity, emitter, t), 1.0, t);
    return m;
}

GateMetrics evaluate_rvp(const ExchangeConfig& cfg, double cooperativity,
                         const EmitterParams& emitter) {
    GateMetrics m;
    if (cfg.delta_over_rabi < 5.0)
        throw std::invalid_argument("evaluate_rvp: Omega/Delta must be <= 0.2");
    const double c_eff =
        effective_cooperativity(cooperativity, emitter.t1_optical(), emitter.t2_optical());
    const double t = rvp_gate_time(c_eff, emitter.gamma, cfg.delta_over_rabi);
    if (cfg.delta_over_rabi < 10.0) m.add_flag(flag::rabi_ratio); // Omega/Delta > 0.1
    m.set_checked(rvp_fidelity(cfg, c_eff, emitter, t), 1.0, t);
    return m;
}

} // namespace tqgate
