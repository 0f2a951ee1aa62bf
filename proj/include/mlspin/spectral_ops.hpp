#pragma once

#include "mlspin/fft.hpp"
#include "mlspin/field.hpp"

namespace mlspin {

/// L2 inner product h^3 * sum over nodes and components.
double inner_product(const VectorField3& F, const VectorField3& G);
double inner_product(const ScalarField& f, const ScalarField& g);

double field_norm(const VectorField3& F);

/// Spectral curl, divergence, gradient; exact for band-limited fields,
/// Nyquist modes annihilated.
VectorField3 curl(const VectorField3& F);
ScalarField divergence(const VectorField3& F);
VectorField3 gradient(const ScalarField& f);

/// Single spectral derivative d/dx_axis.
ScalarField derivative(const ScalarField& f, int axis);

/// Solves laplacian(g) = f - mean(f) with mean(g) = 0; modes in the kernel
/// of the discrete laplacian (k = 0 and pure-Nyquist combinations) map to 0.
ScalarField laplacian_inverse(const ScalarField& f);

/// Leray projection onto divergence-free fields: Id - grad lapinv div.
/// The k = 0 mode passes through unchanged; pure-Nyquist null modes are
/// zeroed so the projector never feeds energy the derivative operators
/// cannot see.
VectorField3 leray_project(const VectorField3& F);

/// Component j at node x is wrap(x_j - q_j) into [-L/2, L/2).
VectorField3 centered_coordinate(const GridSpec& grid, const Vec3& q);

// spectral-domain variants used by the hot paths
void curl_hat(const SpectralVector3& F, SpectralVector3& out);
void divergence_hat(const SpectralVector3& F, SpectralScalar& out);
void gradient_hat(const SpectralScalar& f, SpectralVector3& out);
void derivative_hat(const SpectralScalar& f, int axis, SpectralScalar& out);
void laplacian_inverse_hat(const SpectralScalar& f, SpectralScalar& out);
void leray_hat(SpectralVector3& F);
void laplacian_hat(const SpectralVector3& F, SpectralVector3& out);

} // namespace mlspin
