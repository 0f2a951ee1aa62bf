#pragma once

#include <vector>

#include "mlspin/hamiltonian.hpp"
#include "mlspin/state.hpp"

namespace mlspin {

/// Spectral translation: out(y) = V(y + d).
VectorField3 translate(const VectorField3& V, const Vec3& d);

/// <Pi, grad_* A>_n = sum_j <Pi_j, d_n A_j>.
Vec3 grad_star_inner(const VectorField3& Pi, const VectorField3& A);

/// Canonical transform to the comoving frame: fields recentered at the
/// particle, p replaced by the total momentum P = p - <Pi, grad_* A>.
ComovingState to_comoving(const State& Y);
State from_comoving(const ComovingState& Yc);

/// Comoving Hamiltonian (charge kernels centered at the origin):
///   1/2 int [Pi^2 + (curl A)^2]
///   + |P + <Pi,grad_* A> - <A,rho>|^2/(2m) + |pi - <y^A,rho>|^2/(2I).
double comoving_hamiltonian(const ComovingState& Yc, const ChargeProfile& pr,
                            const ParticleParams& pp);

/// Analytic gradient of the comoving Hamiltonian; D_q = 0 (translation
/// invariance is explicit in this frame). Finite-difference validated in
/// the test suite.
Cotangent grad_comoving_hamiltonian(const ComovingState& Yc, const ChargeProfile& pr,
                                    const ParticleParams& pp);

/// hat(xi) u = xi ^ u.
Mat3 hat(const Vec3& xi);

/// The 24 proper rotations of the cube (signed permutation matrices with
/// determinant +1). These map the grid to itself exactly.
const std::vector<Mat3>& cubic_rotations();

/// T(R) Y = (R A(R^-1 y), R Pi(R^-1 y), Rq, RP, Rpi). Signed-permutation
/// matrices rotate by exact index gather; any other orthogonal matrix falls
/// back to trilinear resampling and sets *used_resampling.
ComovingState rotate_state(const Mat3& R, const ComovingState& Yc,
                           bool* used_resampling = nullptr);

/// Infinitesimal rotation flow:
///   v_xi = (xi^A - ((xi^y).grad)A, xi^Pi - ((xi^y).grad)Pi, xi^q, xi^P, xi^pi).
Tangent deformation_field(const Vec3& xi, const ComovingState& Yc);

/// ((xi ^ y) . grad) V with spectral derivatives and physical-space
/// multiplication by the centered coordinate.
VectorField3 rotation_advect(const Vec3& xi, const VectorField3& V);

/// xi ^ V - ((xi ^ y) . grad) V, the field block of the rotation flow.
VectorField3 rotation_generator(const Vec3& xi, const VectorField3& V);

} // namespace mlspin
