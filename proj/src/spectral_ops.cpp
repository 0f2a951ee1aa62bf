#include "mlspin/spectral_ops.hpp"

#include <vector>

#include "mlspin/kernels.hpp"

namespace mlspin {

namespace {

std::vector<double> keff_table(const GridSpec& g) {
    std::vector<double> k(g.N);
    for (int i = 0; i < g.N; ++i) k[i] = g.k_eff(i);
    return k;
}

} // namespace

double inner_product(const ScalarField& f, const ScalarField& g) {
    require_same_grid(f.grid, g.grid);
    const double h = f.grid.h();
    return h * h * h * kernels::dot(f.values.data(), g.values.data(), f.values.size());
}

double inner_product(const VectorField3& F, const VectorField3& G) {
    require_same_grid(F.grid, G.grid);
    double s = 0.0;
    for (int c = 0; c < 3; ++c) s += inner_product(F[c], G[c]);
    return s;
}

double field_norm(const VectorField3& F) { return std::sqrt(inner_product(F, F)); }

void curl_hat(const SpectralVector3& F, SpectralVector3& out) {
    const GridSpec& g = F.grid;
    const auto k = keff_table(g);
    const int N = g.N, nxh = N / 2 + 1;
    const bool par = kernels::parallel_enabled();
    const std::complex<double>* fx = F[0].coeff.data();
    const std::complex<double>* fy = F[1].coeff.data();
    const std::complex<double>* fz = F[2].coeff.data();
    std::complex<double>* ox = out[0].coeff.data();
    std::complex<double>* oy = out[1].coeff.data();
    std::complex<double>* oz = out[2].coeff.data();
#pragma omp parallel for schedule(static) if (par)
    for (int iz = 0; iz < N; ++iz) {
        const double kz = k[iz];
        for (int iy = 0; iy < N; ++iy) {
            const double ky = k[iy];
            const std::int64_t base = (std::int64_t(iz) * N + iy) * nxh;
            for (int ix = 0; ix < nxh; ++ix) {
                const double kx = k[ix];
                const std::int64_t idx = base + ix;
                const std::complex<double> i(0.0, 1.0);
                ox[idx] = i * (ky * fz[idx] - kz * fy[idx]);
                oy[idx] = i * (kz * fx[idx] - kx * fz[idx]);
                oz[idx] = i * (kx * fy[idx] - ky * fx[idx]);
            }
        }
    }
}

void divergence_hat(const SpectralVector3& F, SpectralScalar& out) {
    const GridSpec& g = F.grid;
    const auto k = keff_table(g);
    const int N = g.N, nxh = N / 2 + 1;
    const bool par = kernels::parallel_enabled();
    const std::complex<double>* fx = F[0].coeff.data();
    const std::complex<double>* fy = F[1].coeff.data();
    const std::complex<double>* fz = F[2].coeff.data();
    std::complex<double>* o = out.coeff.data();
#pragma omp parallel for schedule(static) if (par)
    for (int iz = 0; iz < N; ++iz) {
        for (int iy = 0; iy < N; ++iy) {
            const std::int64_t base = (std::int64_t(iz) * N + iy) * nxh;
            for (int ix = 0; ix < nxh; ++ix) {
                const std::int64_t idx = base + ix;
                o[idx] = std::complex<double>(0.0, 1.0) *
                         (k[ix] * fx[idx] + k[iy] * fy[idx] + k[iz] * fz[idx]);
            }
        }
    }
}

void gradient_hat(const SpectralScalar& f, SpectralVector3& out) {
    for (int a = 0; a < 3; ++a) derivative_hat(f, a, out[a]);
}

void derivative_hat(const SpectralScalar& f, int axis, SpectralScalar& out) {
    const GridSpec& g = f.grid;
    const auto k = keff_table(g);
    const int N = g.N, nxh = N / 2 + 1;
    const bool par = kernels::parallel_enabled();
    const std::complex<double>* in = f.coeff.data();
    std::complex<double>* o = out.coeff.data();
#pragma omp parallel for schedule(static) if (par)
    for (int iz = 0; iz < N; ++iz) {
        for (int iy = 0; iy < N; ++iy) {
            const std::int64_t base = (std::int64_t(iz) * N + iy) * nxh;
            const double kyz = axis == 1 ? k[iy] : (axis == 2 ? k[iz] : 0.0);
            for (int ix = 0; ix < nxh; ++ix) {
                const double ka = axis == 0 ? k[ix] : kyz;
                o[base + ix] = std::complex<double>(0.0, ka) * in[base + ix];
            }
        }
    }
}

void laplacian_inverse_hat(const SpectralScalar& f, SpectralScalar& out) {
    const GridSpec& g = f.grid;
    const auto k = keff_table(g);
    const int N = g.N, nxh = N / 2 + 1;
    const bool par = kernels::parallel_enabled();
    const std::complex<double>* in = f.coeff.data();
    std::complex<double>* o = out.coeff.data();
#pragma omp parallel for schedule(static) if (par)
    for (int iz = 0; iz < N; ++iz) {
        for (int iy = 0; iy < N; ++iy) {
            const std::int64_t base = (std::int64_t(iz) * N + iy) * nxh;
            const double kyz2 = k[iy] * k[iy] + k[iz] * k[iz];
            for (int ix = 0; ix < nxh; ++ix) {
                const double k2 = k[ix] * k[ix] + kyz2;
                o[base + ix] = k2 == 0.0 ? 0.0 : in[base + ix] / (-k2);
            }
        }
    }
}

void laplacian_hat(const SpectralVector3& F, SpectralVector3& out) {
    const GridSpec& g = F.grid;
    const auto k = keff_table(g);
    const int N = g.N, nxh = N / 2 + 1;
    const bool par = kernels::parallel_enabled();
    for (int c = 0; c < 3; ++c) {
        const std::complex<double>* in = F[c].coeff.data();
        std::complex<double>* o = out[c].coeff.data();
#pragma omp parallel for schedule(static) if (par)
        for (int iz = 0; iz < N; ++iz) {
            for (int iy = 0; iy < N; ++iy) {
                const std::int64_t base = (std::int64_t(iz) * N + iy) * nxh;
                const double kyz2 = k[iy] * k[iy] + k[iz] * k[iz];
                for (int ix = 0; ix < nxh; ++ix)
                    o[base + ix] = -(k[ix] * k[ix] + kyz2) * in[base + ix];
            }
        }
    }
}

void leray_hat(SpectralVector3& F) {
    const GridSpec& g = F.grid;
    const auto k = keff_table(g);
    const int N = g.N, nxh = N / 2 + 1;
    const bool par = kernels::parallel_enabled();
    std::complex<double>* fx = F[0].coeff.data();
    std::complex<double>* fy = F[1].coeff.data();
    std::complex<double>* fz = F[2].coeff.data();
#pragma omp parallel for schedule(static) if (par)
    for (int iz = 0; iz < N; ++iz) {
        const double kz = k[iz];
        for (int iy = 0; iy < N; ++iy) {
            const double ky = k[iy];
            const std::int64_t base = (std::int64_t(iz) * N + iy) * nxh;
            for (int ix = 0; ix < nxh; ++ix) {
                const double kx = k[ix];
                const double k2 = kx * kx + ky * ky + kz * kz;
                const std::int64_t idx = base + ix;
                if (k2 == 0.0) {
                    // k = 0 passes through; pure-Nyquist null modes are zeroed
                    if (ix != 0 || iy != 0 || iz != 0) { fx[idx] = fy[idx] = fz[idx] = 0.0; }
                    continue;
                }
                const std::complex<double> kd =
                    (kx * fx[idx] + ky * fy[idx] + kz * fz[idx]) / k2;
                fx[idx] -= kx * kd;
                fy[idx] -= ky * kd;
                fz[idx] -= kz * kd;
            }
        }
    }
}

VectorField3 curl(const VectorField3& F) {
    SpectralVector3 Fh = fft_forward(F);
    SpectralVector3 out(F.grid);
    curl_hat(Fh, out);
    return fft_backward(std::move(out));
}

ScalarField divergence(const VectorField3& F) {
    SpectralVector3 Fh = fft_forward(F);
    SpectralScalar out(F.grid);
    divergence_hat(Fh, out);
    return fft_backward(std::move(out));
}

VectorField3 gradient(const ScalarField& f) {
    SpectralScalar fh = fft_forward(f);
    SpectralVector3 out(f.grid);
    gradient_hat(fh, out);
    return fft_backward(std::move(out));
}

ScalarField derivative(const ScalarField& f, int axis) {
    SpectralScalar fh = fft_forward(f);
    SpectralScalar out(f.grid);
    derivative_hat(fh, axis, out);
    return fft_backward(std::move(out));
}

ScalarField laplacian_inverse(const ScalarField& f) {
    SpectralScalar fh = fft_forward(f);
    SpectralScalar out(f.grid);
    laplacian_inverse_hat(fh, out);
    return fft_backward(std::move(out));
}

VectorField3 leray_project(const VectorField3& F) {
    SpectralVector3 Fh = fft_forward(F);
    leray_hat(Fh);
    return fft_backward(std::move(Fh));
}

VectorField3 centered_coordinate(const GridSpec& g, const Vec3& q) {
    VectorField3 out(g);
    const int N = g.N;
    const bool par = kernels::parallel_enabled();
    std::array<std::vector<double>, 3> wrapped;
    for (int a = 0; a < 3; ++a) {
        wrapped[a].resize(N);
        for (int i = 0; i < N; ++i) wrapped[a][i] = g.wrap(g.node(i) - q[a]);
    }
#pragma omp parallel for schedule(static) if (par)
    for (int iz = 0; iz < N; ++iz) {
        for (int iy = 0; iy < N; ++iy) {
            const std::int64_t base = (std::int64_t(iz) * N + iy) * N;
            for (int ix = 0; ix < N; ++ix) {
                out[0].values[base + ix] = wrapped[0][ix];
                out[1].values[base + ix] = wrapped[1][iy];
                out[2].values[base + ix] = wrapped[2][iz];
            }
        }
    }
    return out;
}

} // namespace mlspin
