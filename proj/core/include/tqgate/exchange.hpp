#pragma once

#include "tqgate/metrics.hpp"
#include "tqgate/params.hpp"

namespace tqgate {

// Virtual photon exchange gates: the simple variant (VP), where the two
// optical transitions exchange a virtual cavity photon, and the Raman
// variant (RVP), which keeps the excited state unpopulated at the cost of a
// (Delta/Omega)^2 slowdown. Optical pure dephasing enters RVP through the
// effective cooperativity C_eff.

struct ExchangeConfig {
    double delta_eps = 0.0;            // detuning between the optical transitions (rad/s)
    double delta_eg = two_pi * 1.62e9; // ground/excited splitting difference (rad/s)
    double two_photon_error = 0.0;     // delta_eps_RVP (rad/s)
    double cavity_detuning = 0.0;      // Delta (rad/s)
    double delta_over_rabi = 10.0;     // Delta / Omega
    double shelving_gamma = std::nan(""); // RVP ground decoherence; default 1/T2e
};

// T_VP = 2 pi / (gamma sqrt(C))
double vp_gate_time(double cooperativity, double gamma);

// F_VP = 1 - 2 pi/sqrt(C) - Gamma T - 0.58 T gamma*
//        - (6 pi^2/32) [(T d_eps/2pi)^2 + (2pi/(T d_eg))^2 - 12/C].  Raw value.
double vp_fidelity(const ExchangeConfig& cfg, double cooperativity,
                   const EmitterParams& emitter, double t_vp);

// C_eff = C / [1 + 0.7 (T1h/T2h - 1)]
double effective_cooperativity(double cooperativity, double t1h, double t2h);

// T_RVP = (Delta/Omega)^2 2 pi / (gamma sqrt(C_eff))
double rvp_gate_time(double c_eff, double gamma, double delta_over_rabi);

// F_RVP = 1 - 2 pi/sqrt(C_eff) - Gamma T
//         - (pi^2/8) [(T d_e/2pi)^2 + D_eps^2/D^2 - 18/C_eff].  Upper bound, raw.
double rvp_fidelity(const ExchangeConfig& cfg, double c_eff,
                    const EmitterParams& emitter, double t_rvp);

GateMetrics evaluate_vp(const ExchangeConfig& cfg, double cooperativity,
                        const EmitterParams& emitter, double g_over_kappa);
GateMetrics evaluate_rvp(const ExchangeConfig& cfg, double cooperativity,
                         const EmitterParams& emitter);

} // namespace tqgate
