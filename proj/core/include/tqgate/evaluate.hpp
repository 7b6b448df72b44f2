#pragma once

#include <string>
#include <vector>

#include "tqgate/metrics.hpp"
#include "tqgate/params.hpp"

namespace tqgate {

enum class Scheme { ib, ibf, sb, mdg, mde, ed, vp, rvp };

Scheme scheme_from_name(const std::string& name); // throws std::invalid_argument
std::string scheme_name(Scheme s);
std::vector<Scheme> all_schemes();

// Evaluates one scheme on a preset with the scheme knobs from the protocol
// config. IB/IBF route to the frequency-mismatch fidelity when delta or a
// phase error is set.
GateMetrics evaluate_scheme(Scheme scheme, const ScenarioPreset& preset,
                            const ProtocolConfig& protocol);

} // namespace tqgate
