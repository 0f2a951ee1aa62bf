#pragma once

#include <utility>

#include "mlspin/charge.hpp"
#include "mlspin/state.hpp"

namespace mlspin {

struct ParticleParams {
    double mass = 1.0;
    double inertia = 1.0;
};

/// Velocities recovered from the conjugate momenta:
///   v = (p - <A, rho(.-q)>)/m,  omega = (pi - <(x-q)^A, rho(.-q)>)/I.
struct Velocities {
    Vec3 v, omega;
    Vec3 a_pair, b_pair; // the two pairings themselves
};

Velocities velocities(const State& Y, const ChargeProfile& pr, const ParticleParams& pp);
Velocities velocities_hat(const State& Y, const SpectralVector3& Ah, const ChargeProfile& pr,
                          const ParticleParams& pp);

/// H = 1/2<Pi,Pi> + 1/2<curl A,curl A> + |p - a|^2/(2m) + |pi - b|^2/(2I).
double hamiltonian(const State& Y, const ChargeProfile& pr, const ParticleParams& pp);

/// Analytic gradient. The A-block is Leray-projected (the phase space is the
/// divergence-free subspace); the q-block is the closed form validated
/// against central finite differences of hamiltonian() in the test suite.
Cotangent grad_hamiltonian(const State& Y, const ChargeProfile& pr, const ParticleParams& pp);

/// Skew block operator: Z -> (Z_Pi, -Z_A, Z_p, -Z_q, -pi ^ Z_pi).
Tangent structural_apply(const Vec3& pi, const Cotangent& Z);
Tangent structural_apply(const State& Y, const Cotangent& Z);

/// Ydot = J(Y) DH(Y).
Tangent rhs(const State& Y, const ChargeProfile& pr, const ParticleParams& pp);

/// Duality pairing <Z, T> = field inner products + dot products.
double pairing(const Cotangent& Z, const Tangent& T);

struct DerivedQuantities {
    Vec3 v, omega;
    VectorField3 E, B;
    ScalarField Phi;
};

DerivedQuantities derived_quantities(const State& Y, const ChargeProfile& pr,
                                     const ParticleParams& pp);

/// Lorentz force <E + w^B, rho(.-q)> and torque <(x-q)^[E + w^B], rho(.-q)>
/// with w(x) = v + omega^(x-q).
std::pair<Vec3, Vec3> lorentz_force_torque(const State& Y, const ChargeProfile& pr,
                                           const ParticleParams& pp);

/// Spectral source field w(x)*rho(x-q) assembled from the translated charge
/// and moment kernels: component m is v_m T_q[rho] + sum_l hat(omega)[m][l] T_q[y_l rho].
SpectralVector3 coupling_current_hat(const ChargeProfile& pr, const Vec3& v, const Vec3& omega,
                                     const Vec3& q);

/// Relative residuals of m*qddot = force and I*omegadot = torque, with the
/// accelerations assembled analytically from rhs (chain rule through the
/// pairings). Verifies the Maxwell-Lorentz form of the equations of motion.
std::pair<double, double> newton_lorentz_residual(const State& Y, const ChargeProfile& pr,
                                                  const ParticleParams& pp);

} // namespace mlspin
