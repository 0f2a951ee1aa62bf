#pragma once

#include <functional>

#include "mlspin/hamiltonian.hpp"

namespace mlspin {

struct RunConfig {
    double dt = 0.0;
    double T = 0.0;
    int observe_every = 1;
    bool reproject_gauge = true;
};

/// Classical four-stage Runge-Kutta step. With reproject, the A and Pi
/// blocks are Leray-projected after the update (roundoff hygiene; the flow
/// preserves the gauge analytically). Throws on non-finite output and when
/// |dt| exceeds the RK4 stability bound for the spectral wave operator,
/// dt_max = 2*sqrt(2)/(sqrt(3)*pi) * h.
State step_rk4(const State& Y, const ChargeProfile& pr, const ParticleParams& pp, double dt,
               bool reproject_gauge = true);

/// Marches round(T/dt) steps from Y0. The observer runs at t = 0, every
/// observe_every-th step, and on the final step. Step failures propagate
/// with the failing time attached.
void evolve(const State& Y0, const ChargeProfile& pr, const ParticleParams& pp,
            const RunConfig& cfg,
            const std::function<void(int step, double t, const State& Y)>& observer);

} // namespace mlspin
