#include "config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tqgate/sweep.hpp"

namespace tqgate::cli {

using nlohmann::json;

namespace {

const std::set<std::string>& angular_fields() {
    static const std::set<std::string> table = {
        "emitter.gamma",     "emitter.gamma_star", "cavity.g",
        "cavity.kappa",      "cavity.gamma_prime", "scheme.delta",
        "scheme.sigma_p",    "scheme.delta_p",     "scheme.delta_eps_a",
        "scheme.delta_eps_b", "scheme.delta_eps",  "scheme.delta_eg",
        "scheme.two_photon_error", "scheme.cavity_detuning",
    };
    return table;
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number())
        throw std::invalid_argument("config: " + path + " must be a number");
    return j.get<double>();
}

void parse_array3(const json& j, const std::string& path, std::array<double, 3>& out) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("config: " + path + " must be an array of 3 numbers");
    for (int i = 0; i < 3; ++i) out[i] = get_number(j[i], path);
}

} // namespace

bool is_angular(const std::string& path) { return angular_fields().count(path) > 0; }

double input_scale(const std::string& path, bool raw_angular) {
    return (!raw_angular && is_angular(path)) ? two_pi : 1.0;
}

ScenarioPreset load_preset(const std::string& name) { return resolve_preset(name); }

ScenarioPreset parse_config(const std::string& json_text, const std::string& base,
                            bool raw_angular) {
    json root = json::parse(json_text);
    if (!root.is_object())
        throw std::invalid_argument("config: top level must be an object");

    std::string base_name = base;
    if (root.contains("preset")) base_name = root["preset"].get<std::string>();
    ScenarioPreset preset = resolve_preset(base_name);

    const auto scale = [&](const std::string& path, double v) {
        return v * input_scale(path, raw_angular);
    };

    for (const auto& [section, body] : root.items()) {
        if (section == "preset") continue;
        if (section == "emitter") {
            for (const auto& [key, value] : body.items()) {
                const std::string path = "emitter." + key;
                if (key == "gamma") preset.emitter.gamma = scale(path, get_number(value, path));
                else if (key == "gamma_star")
                    preset.emitter.gamma_star = scale(path, get_number(value, path));
                else if (key == "t1_spin") preset.emitter.t1_spin = get_number(value, path);
                else if (key == "t2_spin") preset.emitter.t2_spin = get_number(value, path);
                else if (key == "eta_zpl") preset.emitter.eta_zpl = get_number(value, path);
                else if (key == "eta_r") preset.emitter.eta_r = get_number(value, path);
                else if (key == "g_ground") parse_array3(value, path, preset.emitter.g_ground);
                else if (key == "g_excited") parse_array3(value, path, preset.emitter.g_excited);
                else throw std::invalid_argument("config: unknown key " + path);
            }
        } else if (section == "cavity") {
            // g+kappa or cooperativity derive a consistent set; explicit
            // quoted fields then override on top.
            double g = std::nan(""), kappa = std::nan("");
            for (const auto& [key, value] : body.items()) {
                const std::string path = "cavity." + key;
                if (key == "g") g = scale(path, get_number(value, path));
                else if (key == "kappa") kappa = scale(path, get_number(value, path));
                else if (key == "cooperativity" || key == "gamma_prime" ||
                         key == "purcell" || key == "eta_em")
                    continue; // second pass
                else throw std::invalid_argument("config: unknown key " + path);
            }
            if (!std::isnan(g) != !std::isnan(kappa))
                throw std::invalid_argument("config: cavity.g and cavity.kappa come together");
            if (!std::isnan(g)) preset.cavity = derive_cavity(g, kappa, preset.emitter);
            else if (body.contains("cooperativity"))
                preset.cavity = derive_cavity_from_c(
                    get_number(body["cooperativity"], "cavity.cooperativity"),
                    preset.emitter);
            if (body.contains("gamma_prime"))
                preset.cavity.gamma_prime =
                    scale("cavity.gamma_prime",
                          get_number(body["gamma_prime"], "cavity.gamma_prime"));
            if (body.contains("purcell"))
                preset.cavity.purcell = get_number(body["purcell"], "cavity.purcell");
            if (body.contains("eta_em"))
                preset.cavity.eta_em = get_number(body["eta_em"], "cavity.eta_em");
        } else if (section == "detection") {
            for (const auto& [key, value] : body.items()) {
                const std::string path = "detection." + key;
                if (key == "eta_d") preset.detection.eta_d = get_number(value, path);
                else if (key == "eta_c") preset.detection.eta_c = get_number(value, path);
                else throw std::invalid_argument("config: unknown key " + path);
            }
        } else if (section == "scheme") {
            for (const auto& [key, value] : body.items()) {
                const std::string path = "scheme." + key;
                ConfigOverride ov{path, get_number(value, path)};
                apply_override(preset, ov, raw_angular);
            }
        } else {
            throw std::invalid_argument("config: unknown section " + section);
        }
    }
    preset.validate();
    return preset;
}

ScenarioPreset load_config_file(const std::string& path, bool raw_angular) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), "scenario1", raw_angular);
}

void apply_override(ScenarioPreset& preset, const ConfigOverride& ov, bool raw_angular) {
    // Quoted cavity fields bypass the derivation (the presets are built from
    // quoted numbers in exactly this way).
    if (ov.path == "cavity.gamma_prime") {
        preset.cavity.gamma_prime = ov.value * input_scale(ov.path, raw_angular);
        return;
    }
    if (ov.path == "cavity.purcell") {
        preset.cavity.purcell = ov.value;
        return;
    }
    if (ov.path == "cavity.eta_em") {
        preset.cavity.eta_em = ov.value;
        return;
    }
    const std::string full = resolve_parameter(ov.path);
    apply_parameter(preset, preset.protocol, full,
                    ov.value * input_scale(full, raw_angular));
}

std::vector<ConfigOverride> parse_overrides(const std::vector<std::string>& kv) {
    std::vector<ConfigOverride> out;
    for (const auto& s : kv) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("override must be key=value: " + s);
        ConfigOverride ov;
        ov.path = s.substr(0, eq);
        char* end = nullptr;
        const std::string num = s.substr(eq + 1);
        ov.value = std::strtod(num.c_str(), &end);
        if (end == num.c_str() || *end != '\0')
            throw std::invalid_argument("override value is not a number: " + s);
        out.push_back(ov);
    }
    return out;
}

} // namespace tqgate::cli
