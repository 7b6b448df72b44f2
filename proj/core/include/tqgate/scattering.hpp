#pragma once

#include "tqgate/metrics.hpp"
#include "tqgate/params.hpp"

namespace tqgate {

// Cavity-assisted photon scattering (SB) gate: a single photon reflected off
// the two-qubit cavity heralds a CZ. The photon has a Gaussian intensity
// profile with spectral standard deviation sigma_p.

struct ScatteringConfig {
    double sigma_p = 0.0;      // rad/s; evaluate_sb treats 0 as "optimize"
    double delta_p = 0.0;      // mean cavity-photon detuning (rad/s)
    double delta_eps_a = 0.0;  // emitter A - cavity detuning (rad/s)
    double delta_eps_b = 0.0;
    double g_over_kappa = 0.008;
};

// T_SB = 8 pi sqrt(2 ln 2) / sigma_p, twice the FWHM of the photon duration.
double sb_gate_time(double sigma_p);

// eta_SB = (1 - 5/(2C) - (d_eA - d_eB)^2/(2 gamma^2 C)) eta_d, raw value
// (negative at small C; callers clamp and flag).
double sb_efficiency(const ScatteringConfig& cfg, double cooperativity,
                     const EmitterParams& emitter, const DetectionChain& det);

// Raw seven-term fidelity of the scattering gate.
double sb_fidelity(const ScatteringConfig& cfg, double cooperativity,
                   const EmitterParams& emitter);

// Closed-form optimized sigma_p,
//   sigma_p = 2 (4 pi sqrt(2 ln 2) Gamma gamma^2 C^2 / bracket)^{1/3},
//   bracket = 11 - 20 (2g/k)^2 + 12 (2g/k)^4,
// which balances the Gamma T_SB and sigma_p^2 error terms exactly. The true
// stationary point of the fidelity sits at 2^{-1/3} times this value;
// sb_sigma_opt_numeric finds it.
double sb_sigma_opt_closed(double cooperativity, const EmitterParams& emitter,
                           double g_over_kappa);

struct SigmaOptimum {
    double sigma_p = 0.0;
    double fidelity = 0.0;
    bool endpoint = false; // argmax pinned at a bracket edge (objective unbounded)
};

// Golden-section maximization of sb_fidelity over sigma_p, bracketed two
// decades either side of the closed form.
SigmaOptimum sb_sigma_opt_numeric(double cooperativity, const EmitterParams& emitter,
                                  const ScatteringConfig& cfg);

GateMetrics evaluate_sb(const ScatteringConfig& cfg, double cooperativity,
                        const EmitterParams& emitter, const DetectionChain& det);

} // namespace tqgate
