#include "tqgate/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "tqgate/sweep.hpp"

namespace tqgate {

namespace {

const double kWidth = 8.0 * std::numbers::pi * std::sqrt(2.0 * std::log(2.0));

double bracket_poly(double g_over_kappa) {
    const double x = 2.0 * g_over_kappa;
    return 11.0 - 20.0 * x * x + 12.0 * x * x * x * x;
}

} // namespace

double sb_gate_time(double sigma_p) {
    if (sigma_p <= 0.0)
        throw std::invalid_argument("sb_gate_time: sigma_p must be > 0");
    return kWidth / sigma_p;
}

double sb_efficiency(const ScatteringConfig& cfg, double cooperativity,
                     const EmitterParams& emitter, const DetectionChain& det) {
    if (cooperativity <= 0.0)
        throw std::invalid_argument("sb_efficiency: C must be > 0");
    det.validate();
    const double gamma = emitter.gamma;
    const double dd = cfg.delta_eps_a - cfg.delta_eps_b;
    return (1.0 - 5.0 / (2.0 * cooperativity) -
            dd * dd / (2.0 * gamma * gamma * cooperativity)) *
           det.eta_d;
}

double sb_fidelity(const ScatteringConfig& cfg, double cooperativity,
                   const EmitterParams& emitter) {
    if (cooperativity <= 0.0)
        throw std::invalid_argument("sb_fidelity: C must be > 0");
    if (cfg.sigma_p <= 0.0)
        throw std::invalid_argument("sb_fidelity: sigma_p must be > 0");
    const double c = cooperativity;
    const double gamma = emitter.gamma;
    const double big_gamma = emitter.spin_decoherence(); // 1/T2e
    const double g2c2 = gamma * gamma * c * c;
    const double x = 2.0 * cfg.g_over_kappa;
    const double da = cfg.delta_eps_a;
    const double db = cfg.delta_eps_b;

    return 1.0 - 11.0 * emitter.gamma_star / (8.0 * gamma * c) -
           11.0 / (16.0 * c * c) - big_gamma * sb_gate_time(cfg.sigma_p) -
           (-11.0 + 10.0 * x * x) * cfg.delta_p * (da + db) / (4.0 * g2c2) -
           (41.0 * da * da - 38.0 * da * db + 41.0 * db * db) / (16.0 * g2c2) -
           bracket_poly(cfg.g_over_kappa) *
               (cfg.delta_p * cfg.delta_p + cfg.sigma_p * cfg.sigma_p) / (4.0 * g2c2);
}

double sb_sigma_opt_closed(double cooperativity, const EmitterParams& emitter,
                           double g_over_kappa) {
    const double br = bracket_poly(g_over_kappa);
    if (br <= 0.0)
        throw std::invalid_argument("sb_sigma_opt_closed: bracket polynomial <= 0");
    const double gamma = emitter.gamma;
    const double big_gamma = emitter.spin_decoherence();
    const double inner = 4.0 * std::numbers::pi * std::sqrt(2.0 * std::log(2.0)) *
                         big_gamma * gamma * gamma * cooperativity * cooperativity / br;
    return 2.0 * std::cbrt(inner);
}

SigmaOptimum sb_sigma_opt_numeric(double cooperativity, const EmitterParams& emitter,
                                  const ScatteringConfig& cfg) {
    SigmaOptimum out;
    const double center = sb_sigma_opt_closed(cooperativity, emitter, cfg.g_over_kappa);
    if (center <= 0.0) {
        // Gamma = 0 degenerates the closed form; nothing to bracket.
        out.endpoint = true;
        return out;
    }
    // Maximize over ln sigma_p so the golden-section tolerance is relative.
    auto objective = [&](double ln_sigma) {
        ScatteringConfig c = cfg;
        c.sigma_p = std::exp(ln_sigma);
        return sb_fidelity(c, cooperativity, emitter);
    };
    const double lo = std::log(center) - 2.0 * std::log(10.0);
    const double hi = std::log(center) + 2.0 * std::log(10.0);
    GoldenResult r = golden_section_max(objective, lo, hi, 1e-9, 200);
    out.sigma_p = std::exp(r.argmax);
    out.fidelity = r.value;
    out.endpoint = r.endpoint;
    return out;
}

GateMetrics evaluate_sb(const ScatteringConfig& cfg, double cooperativity,
                        const EmitterParams& emitter, const DetectionChain& det) {
    GateMetrics m;
    ScatteringConfig c = cfg;
    if (c.sigma_p <= 0.0) {
        SigmaOptimum opt = sb_sigma_opt_numeric(cooperativity, emitter, cfg);
        c.sigma_p = opt.sigma_p;
        m.add_flag(flag::sigma_optimized);
        if (opt.endpoint) m.add_flag(flag::endpoint_argmax);
        if (c.sigma_p <= 0.0) {
            m.add_flag(flag::sigma_degenerate);
            m.set_checked(0.0, 0.0, 0.0);
            return m;
        }
    }
    m.set_checked(sb_fidelity(c, cooperativity, emitter),
                  sb_efficiency(c, cooperativity, emitter, det),
                  sb_gate_time(c.sigma_p));
    return m;
}

} // namespace tqgate
