#include "tqgate/interference.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace tqgate {

namespace {

// 0/0 guard for the fidelity ratios; below this the analytic limit is used.
constexpr double kSmallWindow = 1e-8;

void check(const InterferenceConfig& cfg) {
    if (cfg.detection_time < 0.0)
        throw std::invalid_argument("interference: detection_time must be >= 0");
    if (cfg.delta_t < 0.0)
        throw std::invalid_argument("interference: delta_t must be >= 0");
}

// (1 - e^{-a T}) / (1 - e^{-b T}) with the T -> 0 limit a/b (1 + (b-a) T/2).
double decay_ratio(double a, double b, double t) {
    if (b * t < kSmallWindow)
        return (a / b) * (1.0 + 0.5 * (b - a) * t);
    return -std::expm1(-a * t) / -std::expm1(-b * t);
}

} // namespace

double ib_gate_time(const InterferenceConfig& cfg) {
    return 2.0 * cfg.detection_time + cfg.delta_t;
}

double ibf_gate_time(const InterferenceConfig& cfg) {
    return 2.0 * cfg.detection_time + cfg.delta_t;
}

double ib_efficiency(const InterferenceConfig& cfg, const CavitySet& cavity,
                     const DetectionChain& det) {
    check(cfg);
    const double ep = eta_prime(cavity, det);
    const double w = -std::expm1(-cfg.detection_time * cavity.gamma_prime);
    return 0.5 * ep * ep * w * w;
}

double ib_fidelity(const InterferenceConfig& cfg, const CavitySet& cavity,
                   const EmitterParams& emitter) {
    check(cfg);
    const double gp = cavity.gamma_prime;
    const double gss = emitter.gamma_s_star();
    const double line = gp + 2.0 * emitter.gamma_star + gss;
    const double ratio = (gp / line) * std::exp(-2.0 * gss * cfg.delta_t) *
                         decay_ratio(line, gp, cfg.detection_time);
    return 0.5 * (1.0 + ratio * ratio);
}

double ibf_efficiency(const InterferenceConfig& cfg, const CavitySet& cavity,
                      const DetectionChain& det) {
    check(cfg);
    const double ep = eta_prime(cavity, det);
    const double gp = cavity.gamma_prime;
    return ep * ep * std::exp(-gp * cfg.delta_t) *
           -std::expm1(-2.0 * gp * cfg.detection_time) *
           -std::expm1(-gp * cfg.detection_time);
}

double ibf_fidelity(const InterferenceConfig& cfg, const CavitySet& cavity,
                    const EmitterParams& emitter) {
    check(cfg);
    const double gp = cavity.gamma_prime;
    const double gstar = emitter.gamma_star;
    const double gss = emitter.gamma_s_star();
    const double line = gp + 2.0 * gstar + gss;
    const double ratio = (gp / line) * std::exp(-cfg.delta_t * (2.0 * gstar + gss)) *
                         decay_ratio(line, gp, cfg.detection_time);
    return 0.5 * (1.0 + ratio);
}

double ibf_fidelity_mismatch(const InterferenceConfig& cfg, const CavitySet& cavity,
                             const EmitterParams& emitter) {
    check(cfg);
    if (std::abs(emitter.gamma_s_star()) > 1e-9)
        throw std::invalid_argument(
            "ibf_fidelity_mismatch: unsupported regime, requires gamma*_s = 0 "
            "(set t2_spin = 2 t1_spin)");
    const double gp = cavity.gamma_prime;
    const double gstar = emitter.gamma_star;
    const std::complex<double> line(gp + 2.0 * gstar, cfg.delta);
    const std::complex<double> i(0.0, 1.0);
    const double td = cfg.detection_time;

    std::complex<double> ratio;
    if (gp * td < kSmallWindow) {
        // same first-order window limit as decay_ratio, complex rates
        ratio = (1.0 + 0.5 * (gp - line) * td);
    } else {
        const std::complex<double> num = 1.0 - std::exp(-line * td);
        ratio = (gp / line) * num / -std::expm1(-gp * td);
    }
    const std::complex<double> ctilde_over_eff =
        std::exp(-cfg.delta_t * std::complex<double>(2.0 * gstar, cfg.delta)) *
        std::exp(i * (cfg.phi_init + cfg.phi_prop)) * ratio;
    return 0.5 * (1.0 + ctilde_over_eff.real());
}

GateMetrics evaluate_ib(const InterferenceConfig& cfg, const CavitySet& cavity,
                        const EmitterParams& emitter, const DetectionChain& det) {
    GateMetrics m;
    m.set_checked(ib_fidelity(cfg, cavity, emitter), ib_efficiency(cfg, cavity, det),
                  ib_gate_time(cfg));
    return m;
}

GateMetrics evaluate_ibf(const InterferenceConfig& cfg, const CavitySet& cavity,
                         const EmitterParams& emitter, const DetectionChain& det) {
    GateMetrics m;
    const bool mismatch = cfg.delta != 0.0 || cfg.phi_init != 0.0 || cfg.phi_prop != 0.0;
    const double f = mismatch ? ibf_fidelity_mismatch(cfg, cavity, emitter)
                              : ibf_fidelity(cfg, cavity, emitter);
    m.set_checked(f, ibf_efficiency(cfg, cavity, det), ibf_gate_time(cfg));
    return m;
}

} // namespace tqgate
