#pragma once

#include <cstdint>
#include <string>

#include "mlspin/hamiltonian.hpp"

namespace mlspin {

/// Initial field content. "random-localized" builds exactly divergence-free
/// fields A, Pi = curl(envelope * W) with W a random low-band field and a
/// Gaussian envelope of width envelope_radius/3 (spectrally clean, tails at
/// the wrap seam below 1e-9 for the default radius). "soliton-guess" solves
/// the magnetostatic problem -lap A = P(w rho) for the rigid velocity field
/// of the configured motion and sets Pi = 0.
struct FieldInitSpec {
    enum class Kind { zero, random_localized, soliton_guess };
    Kind kind = Kind::zero;
    std::uint64_t seed = 1;
    double envelope_radius = 3.0;
};

FieldInitSpec::Kind field_kind_from_string(const std::string& s);

/// Field amplitudes of the random-localized state (L2 norms of A and Pi).
/// Sized so the default N = 48, T = 5 run keeps the RK4 energy drift below
/// the conservation tolerances.
inline constexpr double kRandomAmpA = 0.10;
inline constexpr double kRandomAmpPi = 0.07;

/// Assembles the full initial phase point. For soliton-guess, p0 and pi0
/// are read as m*v0 and I*omega0; the returned conjugate momenta include
/// the field coupling so the state starts at those velocities.
State build_initial_state(const ChargeProfile& pr, const ParticleParams& pp, const Vec3& q0,
                          const Vec3& p0, const Vec3& pi0, const FieldInitSpec& spec);

/// One exactly divergence-free localized random field (unit-free; used by
/// tests as well as the state builder).
VectorField3 random_localized_field(const GridSpec& g, std::uint64_t seed,
                                    double envelope_radius, double amplitude,
                                    const Vec3& center = Vec3{});

} // namespace mlspin
