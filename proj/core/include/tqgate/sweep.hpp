#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tqgate/evaluate.hpp"
#include "tqgate/metrics.hpp"
#include "tqgate/params.hpp"

namespace tqgate {

// 1-D / 2-D parameter sweeps over the config tree, golden-section
// maximization, and multi-scheme comparison tables. Grid points are
// independent pure evaluations; they run on a small worker pool capped by
// TQGATE_THREADS and are gathered positionally, so parallel and serial runs
// produce identical rows.

struct GoldenResult {
    double argmax = 0.0;
    double value = 0.0;
    bool endpoint = false; // argmax converged onto a bracket edge
    int iterations = 0;
};

// Golden-section search for the maximum of a unimodal objective on [lo, hi].
// tol is the absolute interval tolerance (use a log-domain objective for a
// relative one). Throws numerical_error when max_iter is exhausted.
GoldenResult golden_section_max(const std::function<double(double)>& objective,
                                double lo, double hi, double tol = 1e-9,
                                int max_iter = 200);

enum class SweepScale { linear, log };

struct AxisSpec {
    std::string parameter; // dotted path into the config tree
    double from = 0.0;
    double to = 0.0;
    int points = 2;
    SweepScale scale = SweepScale::linear;
};

struct SweepSpec {
    Scheme scheme = Scheme::ib;
    AxisSpec axis;
    std::optional<AxisSpec> axis2;          // optional second dimension
    std::vector<std::pair<std::string, double>> overrides;
};

struct SweepRow {
    double param = 0.0;
    double param2 = std::nan("");
    GateMetrics metrics;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool has_param2 = false;
};

// Parameter paths: "section.field" with sections emitter, cavity, detection,
// scheme; a bare field name resolves when unique across sections. Setting
// cavity.cooperativity (or g/kappa) re-derives the dependent cavity
// quantities from the emitter. Unknown paths throw std::invalid_argument
// naming the path.
void apply_parameter(ScenarioPreset& preset, ProtocolConfig& protocol,
                     const std::string& path, double value);

// All recognized dotted paths (for diagnostics).
std::vector<std::string> known_parameters();

// Expands a bare field name to its full section.field form; throws
// std::invalid_argument for unknown or ambiguous names.
std::string resolve_parameter(const std::string& path);

// True when the axis parameter influences the given scheme's evaluation.
bool parameter_applies(Scheme scheme, const std::string& path);

SweepResult run_sweep(const SweepSpec& spec, const ScenarioPreset& base);

// Grid values for an axis (linear or log spacing, endpoints included).
std::vector<double> axis_values(const AxisSpec& axis);

struct CompareColumn {
    Scheme scheme;
    bool skipped = false;     // axis not applicable to this scheme
    std::string note;
    std::vector<GateMetrics> metrics; // one per axis point unless skipped
};

struct CompareTable {
    std::vector<double> param;
    std::vector<CompareColumn> columns;
};

CompareTable compare_schemes(const std::vector<Scheme>& schemes, const AxisSpec& axis,
                             const ScenarioPreset& base,
                             const std::vector<std::pair<std::string, double>>& overrides = {});

} // namespace tqgate
