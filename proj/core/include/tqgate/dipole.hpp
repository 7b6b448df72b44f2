#pragma once

#include <array>

#include "tqgate/constants.hpp"
#include "tqgate/metrics.hpp"
#include "tqgate/params.hpp"

namespace tqgate {

// Deterministic proximity gates built on the dipolar interaction between two
// nearby emitters: the magnetic dipole gate run in the ground (MDG) or
// excited (MDE) manifold, and the electric dipole (ED) gate driven by the
// permanent-dipole change of the excited emitter.
//
// Rabi frequencies and level splittings here use the quoted-number
// convention (no 2 pi): t_act = pi / Omega with Omega = 0.7 MHz gives
// 4.49 us.

struct DipoleConfig {
    double distance = 10e-9;  // emitter separation r (m)
    double rabi = 0.7e6;      // activation Rabi frequency Omega (quoted, 1/s)
    double splitting = 2.1e6; // Delta_n or Delta_e for the off-resonant error
    double g_par = 2.01;      // g_z of the active manifold
    double g_perp = 2.01;     // g_x = g_y of the active manifold
    double branching_allowed = 0.9;   // active decay fraction on the allowed branch
    double branching_forbidden = 0.1; // fraction on the forbidden cross branch
};

// Decay and dephasing rates entering the magnetic dipole fidelity.
// gamma_1_up / gamma_1_dn: decay of the active levels onto the passive ones,
// split by the 90/10 branching; gamma_2 / gamma_3: spin decay of the passive
// / active pair; gamma_4 / gamma_5: dephasing of the passive / active pair.
struct DipoleRates {
    double gamma_1_up = 0.0;
    double gamma_1_dn = 0.0;
    double gamma_2 = 0.0;
    double gamma_3 = 0.0;
    double gamma_4 = 0.0;
    double gamma_5 = 0.0;
};

struct MdTimes {
    double t_act = 0.0; // pi / Omega, passive -> active transfer (one way)
    double t_int = 0.0; // hbar pi / (4 J_z), the conditional-phase evolution
    double total = 0.0; // 2 t_act + t_int
};

struct DipoleCoupling {
    double j_z = 0.0; // J_z = mu0 (muB g_z)^2 / (8 pi r^3)  [J]
    double j_x = 0.0; // J_{x,y} = mu0 (muB g_{x,y})^2 / (16 pi r^3)
    double j_y = 0.0;
};

DipoleCoupling dipolar_coupling(const DipoleConfig& cfg, const PhysConsts& consts = {});

MdTimes md_times(const DipoleConfig& cfg, double j_z, const PhysConsts& consts = {});

// F_MD = 1 - t_act [7/8 (g1u + g1d) + 13/16 (g2 + g3) + 1/2 (g4 + g5)]
//          - t_int [g1u + g1d + 3/4 g3 + 1/2 g5]
//          - a (J_x + J_y)^2 / J_z^2,   a = (32 (2 - sqrt 2) - pi^2) / 64.
// Raw value; callers clamp and flag.
double md_fidelity(const DipoleRates& rates, const MdTimes& times, const DipoleCoupling& j);

// Off-resonant pi-pulse infidelity (pi/2)^2 exp[-(pi/2) (Delta/Omega)^2].
double offresonant_infidelity(double rabi, double splitting);

// Default rate assignments. Ground gate: passive = nuclear pair within the
// electron-down manifold, active = {common level, electron-up level}; the
// active decay 1/T1e splits between the allowed and forbidden branch,
// gamma_5 is the electron spin dephasing, nuclear rates default to zero.
// Excited gate: hole-spin pair decaying in 100 ns, electron pair passive;
// gamma_5 has no measured value and is dropped.
DipoleRates mdg_rates(const EmitterParams& emitter, double branching_allowed = 0.9,
                      double branching_forbidden = 0.1);
DipoleRates mde_rates(const EmitterParams& emitter, double active_decay_time = 100e-9,
                      double branching_allowed = 0.9, double branching_forbidden = 0.1);

inline constexpr double kMdeGFactor = 3.45; // largest orientational subset
inline constexpr double kMdgGFactor = 2.01; // isotropic electron g

// Measured permanent-dipole change: y-component only, and with both
// components included.
inline constexpr double kDeltaMuY = 49e-31;    // C m
inline constexpr double kDeltaMuBoth = 55e-31; // C m

struct EdConfig {
    double delta_mu = kDeltaMuY;     // permanent-dipole change (C m)
    double refractive_index = 3.45;  // silicon; dielectric constant = n^2
    double orientation_factor = 1.0; // mu.mu - 3 (mu.r)(mu.r), |.| <= 2
    double rabi_control = 562.5e6;   // Omega_c (quoted, 1/s)
    double delta_nu_error = 0.0;     // error on Delta nu (Hz)
};

// Delta nu = dmu^2 kappa_orient / (4 pi eps eps0 h r^3), in Hz (quoted-number
// convention; signed by the orientation factor).
double ed_frequency_shift(const EdConfig& cfg, double distance, const PhysConsts& consts = {});

// T_ED = 2 pi / Omega_c + 3 pi sqrt(3) / Delta nu (the effective 2 pi pulse
// fixes Omega_t = Delta nu / sqrt 3).
double ed_gate_time(const EdConfig& cfg, double delta_nu);

// F_ED = 1 - T_ED/80 (42 gamma + 25 gamma* + 25 chi) - 43 pi^2/128 (dnu_err/dnu)^2,
// chi = 1/T2e. Raw value.
double ed_fidelity(const EmitterParams& emitter, double t_ed, double delta_nu,
                   double delta_nu_error);

GateMetrics evaluate_mdg(const DipoleConfig& cfg, const EmitterParams& emitter);
GateMetrics evaluate_mde(const DipoleConfig& cfg, const EmitterParams& emitter);
GateMetrics evaluate_ed(const EdConfig& cfg, double distance, const EmitterParams& emitter);

} // namespace tqgate
