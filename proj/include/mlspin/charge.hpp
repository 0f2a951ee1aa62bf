#pragma once

#include <array>

#include "mlspin/field.hpp"
#include "mlspin/spectral_ops.hpp"

namespace mlspin {

/// Smooth compactly supported spherical charge density
///   rho(x) = C * exp(-R^2/(R^2 - |x|^2))  for |x| < R,  0 otherwise.
///
/// Two representations are kept:
///  - rho: pointwise samples, normalized so h^3*sum = Q exactly. These carry
///    the exact support and the exactly vanishing odd moments.
///  - rho_hat / moment_hat: the band-limited representation used by every
///    pairing and by the dynamics. Coefficients come from the continuum
///    radial Fourier transform evaluated per integer shell s = |m|^2, so
///    they are exactly invariant under the cubic rotation group and carry
///    no sampling anisotropy. moment_hat is the transform of y_l*rho(y),
///    i.e. i * d(rho_hat)/dk_l, from the same radial quadrature.
///
/// The seven pure-Nyquist corner modes (the kernel of the discrete
/// Laplacian) are zeroed in rho_hat so the Poisson solve closes the Gauss
/// law exactly under the neutralizing-background convention.
struct ChargeProfile {
    GridSpec grid;
    double R_rho = 0.0;
    double Q = 0.0;
    double C = 0.0; // sample normalization constant (midpoint quadrature)
    double r2_moment = 0.0; // continuum <|y|^2 rho> for the band-limited rep

    ScalarField rho;
    SpectralScalar rho_hat;
    std::array<SpectralScalar, 3> moment_hat;

    static ChargeProfile create(double R_rho, double Q, const GridSpec& grid);
};

/// Per-axis translation phases e^{-i k_eff q} (q wrapped first, so shifts
/// by full periods are bitwise no-ops).
struct ShiftPhase {
    std::vector<std::complex<double>> x, y, z; // sizes N/2+1, N, N
};
ShiftPhase make_shift_phase(const GridSpec& grid, const Vec3& q);

/// out = in * phase(q): the spectral translation of a kernel to center q.
void apply_shift(const SpectralScalar& in, const ShiftPhase& ph, SpectralScalar& out);

/// Pairing <f, g> = h^3/N^3 * Re sum fh * conj(gh) over the half spectrum.
double spectral_pair(const SpectralScalar& fh, const SpectralScalar& gh);

/// <F_j(x), rho(x-q)> for j = 1..3.
Vec3 charge_inner(const ChargeProfile& pr, const VectorField3& F, const Vec3& q);
Vec3 charge_inner_hat(const ChargeProfile& pr, const SpectralVector3& Fh, const Vec3& q);

/// <(x-q) ^ F(x), rho(x-q)> via the shifted moment kernels.
Vec3 moment_inner(const ChargeProfile& pr, const VectorField3& F, const Vec3& q);
Vec3 moment_inner_hat(const ChargeProfile& pr, const SpectralVector3& Fh, const Vec3& q);

/// Coulomb potential: laplacian_inverse of -rho(.-q), zero-mean convention.
ScalarField coulomb_potential(const ChargeProfile& pr, const Vec3& q);

/// T_q[rho] as a spectral field (used to assemble w*rho source terms).
SpectralScalar shifted_rho_hat(const ChargeProfile& pr, const Vec3& q);

/// Kernel-derivative pairings feeding D_q H and the Newton-Lorentz check:
///   drho[m][j]      = <F_m, (d_j rho)(.-q)>
///   dmoment[l][m][j] = <F_m, (d_j (y_l rho))(.-q)>
Mat3 drho_pairings(const ChargeProfile& pr, const SpectralVector3& Fh, const Vec3& q);
std::array<Mat3, 3> dmoment_pairings(const ChargeProfile& pr, const SpectralVector3& Fh,
                                     const Vec3& q);

} // namespace mlspin
