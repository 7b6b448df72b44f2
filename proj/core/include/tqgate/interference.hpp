#pragma once

#include "tqgate/metrics.hpp"
#include "tqgate/params.hpp"

namespace tqgate {

// Closed-form efficiency and fidelity of the two photon interference-based
// entanglement schemes: the two-round scheme (IB) and its feedback variant
// (IBF), plus the IBF variant with optical frequency mismatch and phase
// errors. All take the detection window T_d and spin-flip time delta_t from
// the config; gate time is 2 T_d + delta_t for both schemes.

struct InterferenceConfig {
    double detection_time = 0.0; // T_d (s)
    double delta_t = 0.0;        // spin-flip / feedback time (s)
    double delta = 0.0;          // frequency difference between emitters (rad/s)
    double phi_init = 0.0;       // relative initialization phase (rad)
    double phi_prop = 0.0;       // relative propagation phase (rad)
};

// eta_IB = eta'^2/2 (1 - e^{-T_d gamma'})^2
double ib_efficiency(const InterferenceConfig& cfg, const CavitySet& cavity,
                     const DetectionChain& det);

// F_IB = 1/2 (1 + Ctilde^2 / (1 - e^{-gamma' T_d})^2), with
// Ctilde = gamma'/(Gamma' + gamma*_s) e^{-2 gamma*_s dt}
//          (1 - e^{-(Gamma' + gamma*_s) T_d})   and Gamma' = gamma' + 2 gamma*.
// The T_d -> 0 limit of the ratio is taken analytically.
double ib_fidelity(const InterferenceConfig& cfg, const CavitySet& cavity,
                   const EmitterParams& emitter);

// eta_IBF = eta'^2 e^{-gamma' dt} (1 - e^{-2 gamma' T_d}) (1 - e^{-gamma' T_d})
double ibf_efficiency(const InterferenceConfig& cfg, const CavitySet& cavity,
                      const DetectionChain& det);

// F_IBF = 1/2 (1 + Ctilde / (1 - e^{-gamma' T_d})), with
// Ctilde = gamma'/(Gamma' + gamma*_s) e^{-dt (2 gamma* + gamma*_s)}
//          (1 - e^{-T_d (Gamma' + gamma*_s)}).
double ibf_fidelity(const InterferenceConfig& cfg, const CavitySet& cavity,
                    const EmitterParams& emitter);

// IBF fidelity with frequency mismatch Delta and phase errors, valid only
// with zero spin dephasing: F = 1/2 (1 + Re Ctilde / (1 - e^{-gamma' T_d})),
// Ctilde = gamma'/(Gamma' + i Delta) e^{-dt (2 gamma* + i Delta)}
//          (1 - e^{-T_d (Gamma' + i Delta)}) e^{i(phi_init + phi_prop)}.
// Throws std::invalid_argument when the emitter has gamma*_s != 0; no
// combined closed form exists for that regime.
double ibf_fidelity_mismatch(const InterferenceConfig& cfg, const CavitySet& cavity,
                             const EmitterParams& emitter);

double ib_gate_time(const InterferenceConfig& cfg);
double ibf_gate_time(const InterferenceConfig& cfg);

GateMetrics evaluate_ib(const InterferenceConfig& cfg, const CavitySet& cavity,
                        const EmitterParams& emitter, const DetectionChain& det);
GateMetrics evaluate_ibf(const InterferenceConfig& cfg, const CavitySet& cavity,
                         const EmitterParams& emitter, const DetectionChain& det);

} // namespace tqgate
