#include "tqgate/evaluate.hpp"

#include <cmath>
#include <stdexcept>

#include "tqgate/dipole.hpp"
#include "tqgate/exchange.hpp"
#include "tqgate/interference.hpp"
#include "tqgate/scattering.hpp"

namespace tqgate {

Scheme scheme_from_name(const std::string& name) {
    if (name == "ib") return Scheme::ib;
    if (name == "ibf") return Scheme::ibf;
    if (name == "sb") return Scheme::sb;
    if (name == "mdg") return Scheme::mdg;
    if (name == "mde") return Scheme::mde;
    if (name == "ed") return Scheme::ed;
    if (name == "vp") return Scheme::vp;
    if (name == "rvp") return Scheme::rvp;
    throw std::invalid_argument("unknown scheme: " + name);
}

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::ib: return "ib";
        case Scheme::ibf: return "ibf";
        case Scheme::sb: return "sb";
        case Scheme::mdg: return "mdg";
        case Scheme::mde: return "mde";
        case Scheme::ed: return "ed";
        case Scheme::vp: return "vp";
        case Scheme::rvp: return "rvp";
    }
    throw std::invalid_argument("unknown scheme enum");
}

std::vector<Scheme> all_schemes() {
    return {Scheme::ib, Scheme::ibf, Scheme::sb, Scheme::mdg,
            Scheme::mde, Scheme::ed, Scheme::vp, Scheme::rvp};
}

GateMetrics evaluate_scheme(Scheme scheme, const ScenarioPreset& preset,
                            const ProtocolConfig& protocol) {
    preset.validate();
    InterferenceConfig icfg;
    icfg.detection_time = protocol.detection_time;
    icfg.delta_t = std::isnan(protocol.delta_t) ? preset.delta_t : protocol.delta_t;
    icfg.delta = protocol.delta;
    icfg.phi_init = protocol.phi_init;
    icfg.phi_prop = protocol.phi_prop;

    switch (scheme) {
        case Scheme::ib:
            return evaluate_ib(icfg, preset.cavity, preset.emitter, preset.detection);
        case Scheme::ibf:
            return evaluate_ibf(icfg, preset.cavity, preset.emitter, preset.detection);
        case Scheme::sb: {
            ScatteringConfig cfg;
            cfg.sigma_p = protocol.sigma_p;
            cfg.delta_p = protocol.delta_p;
            cfg.delta_eps_a = protocol.delta_eps_a;
            cfg.delta_eps_b = protocol.delta_eps_b;
            cfg.g_over_kappa = protocol.g_over_kappa;
            return evaluate_sb(cfg, preset.cavity.cooperativity, preset.emitter,
                               preset.detection);
        }
        case Scheme::mdg: {
            DipoleConfig cfg;
            cfg.distance = protocol.distance;
            cfg.rabi = protocol.rabi;
            cfg.splitting = protocol.splitting;
            cfg.g_par = preset.emitter.g_ground[2];
            cfg.g_perp = preset.emitter.g_ground[0];
            cfg.branching_allowed = protocol.branching_allowed;
            cfg.branching_forbidden = protocol.branching_forbidden;
            return evaluate_mdg(cfg, preset.emitter);
        }
        case Scheme::mde: {
            DipoleConfig cfg;
            cfg.distance = protocol.distance;
            cfg.rabi = protocol.rabi;
            cfg.splitting = protocol.splitting;
            cfg.g_par = preset.emitter.g_excited[2];
            cfg.g_perp = preset.emitter.g_excited[0];
            cfg.branching_allowed = protocol.branching_allowed;
            cfg.branching_forbidden = protocol.branching_forbidden;
            return evaluate_mde(cfg, preset.emitter);
        }
        case Scheme::ed: {
            EdConfig cfg;
            cfg.delta_mu = protocol.delta_mu;
            cfg.refractive_index = protocol.refractive_index;
            cfg.orientation_factor = protocol.orientation_factor;
            cfg.rabi_control = protocol.rabi_control;
            cfg.delta_nu_error = protocol.delta_nu_error;
            return evaluate_ed(cfg, protocol.distance, preset.emitter);
        }
        case Scheme::vp: {
            ExchangeConfig cfg;
            cfg.delta_eps = protocol.delta_eps;
            cfg.delta_eg = protocol.delta_eg;
            return evaluate_vp(cfg, preset.cavity.cooperativity, preset.emitter,
                               protocol.g_over_kappa);
        }
        case Scheme::rvp: {
            ExchangeConfig cfg;
            cfg.delta_eps = protocol.delta_eps;
            cfg.two_photon_error = protocol.two_photon_error;
            cfg.cavity_detuning = protocol.cavity_detuning;
            cfg.delta_over_rabi = protocol.delta_over_rabi;
            cfg.shelving_gamma = protocol.shelving_gamma;
            return evaluate_rvp(cfg, preset.cavity.cooperativity, preset.emitter);
        }
    }
    throw std::invalid_argument("unknown scheme enum");
}

} // namespace tqgate
