#pragma once

#include <map>
#include <optional>
#include <string>

#include "mlspin/initial_conditions.hpp"
#include "mlspin/integrator.hpp"

namespace mlspin {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full simulation configuration, a flat JSON document with fixed sections.
/// Unknown keys anywhere are errors.
struct SimConfig {
    GridSpec grid{16.0, 48};
    double R_rho = 2.0;
    double Q = 1.0;
    ParticleParams particle;
    Vec3 q0{0.0, 0.0, 0.0};
    Vec3 p0{0.12, 0.04, -0.08};
    Vec3 pi0{0.8, -1.0, 0.6};
    FieldInitSpec fields{FieldInitSpec::Kind::random_localized, 1, 3.0};
    RunConfig run{0.0, 5.0, 10, true}; // dt = 0 means "use 0.1 h"
    std::map<std::string, double> check_tolerances;

    double dt_effective() const { return run.dt > 0.0 ? run.dt : 0.1 * grid.h(); }
};

/// Parses and validates a config file. Syntax errors carry line:column;
/// semantic errors carry the JSON key path (and the line of the offending
/// key where it can be located in the source text).
SimConfig parse_sim_config(const std::string& path);
SimConfig parse_sim_config_text(const std::string& text, const std::string& origin);

} // namespace mlspin
