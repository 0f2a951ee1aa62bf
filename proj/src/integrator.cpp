#include "mlspin/integrator.hpp"

#include <cmath>
#include <sstream>

namespace mlspin {

State step_rk4(const State& Y, const ChargeProfile& pr, const ParticleParams& pp, double dt,
               bool reproject_gauge) {
    const double h = Y.A.grid.h();
    const double dt_max = 2.0 * std::sqrt(2.0) / (std::sqrt(3.0) * M_PI) * h;
    if (!(std::abs(dt) <= dt_max)) {
        std::ostringstream os;
        os << "time step " << dt << " exceeds the RK4 stability bound " << dt_max;
        throw std::invalid_argument(os.str());
    }

    const Tangent k1 = rhs(Y, pr, pp);
    const Tangent k2 = rhs(add_scaled(Y, k1, 0.5 * dt), pr, pp);
    const Tangent k3 = rhs(add_scaled(Y, k2, 0.5 * dt), pr, pp);
    const Tangent k4 = rhs(add_scaled(Y, k3, dt), pr, pp);

    State out = Y;
    const double c1 = dt / 6.0, c2 = dt / 3.0;
    add_scaled(out.A, k1.A_dot, c1);
    add_scaled(out.A, k2.A_dot, c2);
    add_scaled(out.A, k3.A_dot, c2);
    add_scaled(out.A, k4.A_dot, c1);
    add_scaled(out.Pi, k1.Pi_dot, c1);
    add_scaled(out.Pi, k2.Pi_dot, c2);
    add_scaled(out.Pi, k3.Pi_dot, c2);
    add_scaled(out.Pi, k4.Pi_dot, c1);
    out.q += c1 * k1.q_dot + c2 * k2.q_dot + c2 * k3.q_dot + c1 * k4.q_dot;
    out.p += c1 * k1.p_dot + c2 * k2.p_dot + c2 * k3.p_dot + c1 * k4.p_dot;
    out.pi += c1 * k1.pi_dot + c2 * k2.pi_dot + c2 * k3.pi_dot + c1 * k4.pi_dot;

    if (reproject_gauge) {
        out.A = leray_project(out.A);
        out.Pi = leray_project(out.Pi);
    }
    if (!state_finite(out)) throw std::runtime_error("blow-up detected: reduce dt");
    return out;
}

void evolve(const State& Y0, const ChargeProfile& pr, const ParticleParams& pp,
            const RunConfig& cfg,
            const std::function<void(int, double, const State&)>& observer) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("run: dt must be positive");
    if (!(cfg.T >= 0.0)) throw std::invalid_argument("run: T must be non-negative");
    if (cfg.observe_every < 1) throw std::invalid_argument("run: observe_every must be >= 1");

    const long nsteps = std::lround(cfg.T / cfg.dt);
    State Y = Y0;
    observer(0, 0.0, Y);
    for (long s = 1; s <= nsteps; ++s) {
        try {
            Y = step_rk4(Y, pr, pp, cfg.dt, cfg.reproject_gauge);
        } catch (const std::runtime_error& e) {
            std::ostringstream os;
            os << e.what() << " (t = " << s * cfg.dt << ")";
            throw std::runtime_error(os.str());
        }
        if (s % cfg.observe_every == 0 || s == nsteps) observer(int(s), s * cfg.dt, Y);
    }
}

} // namespace mlspin
