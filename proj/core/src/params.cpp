#include "tqgate/params.hpp"
#include "tqgate/metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tqgate {

std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (const auto& f : flags) {
        if (!out.empty()) out += ';';
        out += f;
    }
    return out;
}

void EmitterParams::validate() const {
    if (gamma < 0.0 || gamma_star < 0.0)
        throw std::invalid_argument("emitter: optical rates must be >= 0");
    if (t1_spin <= 0.0 || t2_spin <= 0.0)
        throw std::invalid_argument("emitter: spin times must be > 0");
    if (t2_spin > 2.0 * t1_spin + 1e-30)
        throw std::invalid_argument("emitter: T2e <= 2 T1e required (gamma*_s >= 0)");
    if (eta_zpl < 0.0 || eta_zpl > 1.0)
        throw std::invalid_argument("emitter: eta_zpl outside [0,1]");
    if (eta_r < 0.0 || eta_r > 1.0)
        throw std::invalid_argument("emitter: eta_r outside [0,1]");
}

void DetectionChain::validate() const {
    if (eta_d < 0.0 || eta_d > 1.0)
        throw std::invalid_argument("detection: eta_d outside [0,1]");
    if (eta_c < 0.0 || eta_c > 1.0)
        throw std::invalid_argument("detection: eta_c outside [0,1]");
}

void ScenarioPreset::validate() const {
    emitter.validate();
    detection.validate();
    if (cavity.gamma_prime <= 0.0)
        throw std::invalid_argument("cavity: gamma_prime must be > 0");
    if (cavity.eta_em < 0.0 || cavity.eta_em >= 1.0)
        throw std::invalid_argument("cavity: eta_em outside [0,1)");
    if (delta_t < 0.0)
        throw std::invalid_argument("preset: delta_t must be >= 0");
}

CavitySet derive_cavity(double g, double kappa, const EmitterParams& emitter) {
    if (g < 0.0)
        throw std::invalid_argument("derive_cavity: g must be >= 0");
    if (kappa <= 0.0)
        throw std::invalid_argument("derive_cavity: kappa must be > 0");
    if (emitter.gamma <= 0.0)
        throw std::invalid_argument("derive_cavity: gamma must be > 0");
    CavitySet c = derive_cavity_from_c(4.0 * g * g / (kappa * emitter.gamma), emitter);
    c.g_coupling = g;
    c.kappa = kappa;
    return c;
}

CavitySet derive_cavity_from_c(double cooperativity, const EmitterParams& emitter) {
    if (cooperativity < 0.0)
        throw std::invalid_argument("derive_cavity_from_c: C must be >= 0");
    if (emitter.gamma <= 0.0)
        throw std::invalid_argument("derive_cavity_from_c: gamma must be > 0");
    const double branching = emitter.eta_r * emitter.eta_zpl;
    if (cooperativity > 0.0 && branching <= 0.0)
        throw std::invalid_argument("derive_cavity_from_c: eta_r*eta_zpl = 0 with C > 0");
    CavitySet c;
    c.cooperativity = cooperativity;
    c.purcell = cooperativity > 0.0 ? cooperativity / branching : 0.0;
    c.gamma_prime = emitter.gamma * (1.0 + cooperativity);
    c.eta_em = cooperativity / (1.0 + cooperativity);
    return c;
}

double eta_prime(const CavitySet& cavity, const DetectionChain& det) {
    det.validate();
    if (cavity.eta_em < 0.0 || cavity.eta_em > 1.0)
        throw std::invalid_argument("eta_prime: eta_em outside [0,1]");
    return det.eta_d * det.eta_c * cavity.eta_em;
}

namespace {

EmitterParams scenario_emitter(double gamma_prime, double cooperativity) {
    EmitterParams e;
    e.gamma = gamma_prime / (1.0 + cooperativity);
    e.gamma_star = two_pi * 0.1e6; // bulk optical dephasing
    return e;
}

} // namespace

ScenarioPreset preset_scenario1() {
    ScenarioPreset p;
    p.name = "scenario1";
    const double gamma_prime = two_pi * 2.5e6;
    p.cavity.cooperativity = 14.0;
    p.cavity.purcell = 256.5;
    p.cavity.gamma_prime = gamma_prime;
    p.cavity.eta_em = 0.93;
    p.emitter = scenario_emitter(gamma_prime, p.cavity.cooperativity);
    p.delta_t = std::numbers::pi / 150e6; // pi / Omega_MW, 20.9 ns
    p.protocol.delta_t = p.delta_t;
    return p;
}

ScenarioPreset preset_scenario2() {
    ScenarioPreset p;
    p.name = "scenario2";
    const double gamma_prime = two_pi * 12.7e6;
    p.cavity.cooperativity = 74.0;
    p.cavity.purcell = 1402.4;
    p.cavity.gamma_prime = gamma_prime;
    p.cavity.eta_em = 74.0 / 75.0;
    p.emitter = scenario_emitter(gamma_prime, p.cavity.cooperativity);
    p.delta_t = std::numbers::pi / 2.25e9; // pi / Delta_updown, 1.4 ns
    p.protocol.delta_t = p.delta_t;
    return p;
}

ScenarioPreset resolve_preset(const std::string& name) {
    if (name == "scenario1") return preset_scenario1();
    if (name == "scenario2") return preset_scenario2();
    throw std::invalid_argument("unknown preset: " + name);
}

} // namespace tqgate
