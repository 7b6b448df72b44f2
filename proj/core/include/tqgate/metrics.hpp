#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace tqgate {

// Flag tokens attached to a metrics row. Serialized as a semicolon-separated
// list in the CSV flags column; empty when clean.
namespace flag {
inline constexpr const char* fidelity_clamped = "fidelity_clamped";
inline constexpr const char* efficiency_clamped = "efficiency_clamped";
inline constexpr const char* endpoint_argmax = "endpoint_argmax";
inline constexpr const char* sigma_degenerate = "sigma_degenerate";
inline constexpr const char* sigma_optimized = "sigma_optimized";
inline constexpr const char* gamma5_dropped = "gamma5_dropped";
inline constexpr const char* nuclear_rates_default = "nuclear_rates_default";
inline constexpr const char* strong_coupling = "strong_coupling";
inline constexpr const char* slow_gate = "slow_gate";
inline constexpr const char* rabi_ratio = "rabi_ratio";
inline constexpr const char* not_applicable = "not_applicable";
} // namespace flag

// (fidelity, efficiency, gate time) triple returned by every scheme
// evaluator. fidelity/efficiency hold the raw model values; the perturbative
// formulas can leave [0,1], in which case the clamped accessors saturate and
// a flag records it. Sweep output carries the raw values plus the flags.
struct GateMetrics {
    double fidelity = 0.0;    // raw
    double efficiency = 0.0;  // raw
    double gate_time = 0.0;   // seconds
    std::vector<std::string> flags;

    double fidelity_clamped() const { return std::clamp(fidelity, 0.0, 1.0); }
    double efficiency_clamped() const { return std::clamp(efficiency, 0.0, 1.0); }

    void add_flag(const std::string& f) {
        for (const auto& g : flags)
            if (g == f) return;
        flags.push_back(f);
    }
    bool has_flag(const std::string& f) const {
        for (const auto& g : flags)
            if (g == f) return true;
        return false;
    }
    // Sets the stored values and records clamping flags for out-of-range ones.
    void set_checked(double fid, double eff, double time) {
        fidelity = fid;
        efficiency = eff;
        gate_time = time;
        if (fid < 0.0 || fid > 1.0) add_flag(flag::fidelity_clamped);
        if (eff < 0.0 || eff > 1.0) add_flag(flag::efficiency_clamped);
    }
};

std::string join_flags(const std::vector<std::string>& flags);

} // namespace tqgate
