#pragma once

#include "mlspin/field.hpp"
#include "mlspin/kernels.hpp"

namespace mlspin {

/// Phase point Y = (A, Pi, q, p, pi): divergence-free vector potential and
/// field momentum plus particle center, linear momentum and spin momentum.
struct State {
    VectorField3 A, Pi;
    Vec3 q, p, pi;

    State() = default;
    explicit State(const GridSpec& g) : A(g), Pi(g) {}
};

/// Gradient of a Hamiltonian: same shape as State.
struct Cotangent {
    VectorField3 dA, dPi;
    Vec3 dq, dp, dpi;

    Cotangent() = default;
    explicit Cotangent(const GridSpec& g) : dA(g), dPi(g) {}
};

/// Right-hand-side vector: same shape as State.
struct Tangent {
    VectorField3 A_dot, Pi_dot;
    Vec3 q_dot, p_dot, pi_dot;

    Tangent() = default;
    explicit Tangent(const GridSpec& g) : A_dot(g), Pi_dot(g) {}
};

/// Comoving phase point (A(q+y), Pi(q+y), q, P, pi) with P the total momentum.
struct ComovingState {
    VectorField3 A, Pi;
    Vec3 q, P, pi;

    ComovingState() = default;
    explicit ComovingState(const GridSpec& g) : A(g), Pi(g) {}
};

inline void add_scaled(VectorField3& y, const VectorField3& x, double c) {
    for (int i = 0; i < 3; ++i)
        kernels::axpby(c, x[i].values.data(), 1.0, y[i].values.data(), y[i].values.size());
}

inline State add_scaled(const State& Y, const Tangent& k, double c) {
    State out = Y;
    add_scaled(out.A, k.A_dot, c);
    add_scaled(out.Pi, k.Pi_dot, c);
    out.q += c * k.q_dot;
    out.p += c * k.p_dot;
    out.pi += c * k.pi_dot;
    return out;
}

inline bool state_finite(const State& Y) {
    for (int i = 0; i < 3; ++i) {
        if (!kernels::all_finite(Y.A[i].values.data(), Y.A[i].values.size())) return false;
        if (!kernels::all_finite(Y.Pi[i].values.data(), Y.Pi[i].values.size())) return false;
    }
    return finite(Y.q) && finite(Y.p) && finite(Y.pi);
}

} // namespace mlspin
