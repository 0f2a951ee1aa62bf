#include "mlspin/comoving.hpp"

#include <cmath>

#include "mlspin/charge.hpp"

namespace mlspin {

VectorField3 translate(const VectorField3& V, const Vec3& d) {
    // out(y) = V(y + d) is a shift by -d
    const ShiftPhase ph = make_shift_phase(V.grid, -d);
    SpectralVector3 Vh = fft_forward(V);
    for (int c = 0; c < 3; ++c) {
        SpectralScalar tmp(V.grid);
        apply_shift(Vh[c], ph, tmp);
        Vh[c] = std::move(tmp);
    }
    return fft_backward(std::move(Vh));
}

Vec3 grad_star_inner(const VectorField3& Pi, const VectorField3& A) {
    require_same_grid(Pi.grid, A.grid);
    SpectralVector3 Pih = fft_forward(Pi);
    SpectralVector3 Ah = fft_forward(A);
    SpectralScalar dA(A.grid);
    Vec3 out;
    for (int n = 0; n < 3; ++n) {
        double s = 0.0;
        for (int j = 0; j < 3; ++j) {
            derivative_hat(Ah[j], n, dA);
            s += spectral_pair(Pih[j], dA);
        }
        out[n] = s;
    }
    return out;
}

ComovingState to_comoving(const State& Y) {
    ComovingState out(Y.A.grid);
    out.A = translate(Y.A, Y.q);
    out.Pi = translate(Y.Pi, Y.q);
    out.q = Y.q;
    out.pi = Y.pi;
    out.P = Y.p - grad_star_inner(out.Pi, out.A);
    return out;
}

State from_comoving(const ComovingState& Yc) {
    State out(Yc.A.grid);
    out.A = translate(Yc.A, -Yc.q);
    out.Pi = translate(Yc.Pi, -Yc.q);
    out.q = Yc.q;
    out.pi = Yc.pi;
    out.p = Yc.P + grad_star_inner(Yc.Pi, Yc.A);
    return out;
}

double comoving_hamiltonian(const ComovingState& Yc, const ChargeProfile& pr,
                            const ParticleParams& pp) {
    require_same_grid(Yc.A.grid, pr.grid);
    const Vec3 origin{};
    SpectralVector3 Ah = fft_forward(Yc.A);
    const Vec3 alpha = charge_inner_hat(pr, Ah, origin);
    const Vec3 beta = moment_inner_hat(pr, Ah, origin);
    const Vec3 s = grad_star_inner(Yc.Pi, Yc.A);
    SpectralVector3 cAh(Yc.A.grid);
    curl_hat(Ah, cAh);
    VectorField3 cA = fft_backward(std::move(cAh));
    const Vec3 G = Yc.P + s - alpha;
    const Vec3 W = Yc.pi - beta;
    return 0.5 * inner_product(Yc.Pi, Yc.Pi) + 0.5 * inner_product(cA, cA) +
           dot(G, G) / (2.0 * pp.mass) + dot(W, W) / (2.0 * pp.inertia);
}

Cotangent grad_comoving_hamiltonian(const ComovingState& Yc, const ChargeProfile& pr,
                                    const ParticleParams& pp) {
    require_same_grid(Yc.A.grid, pr.grid);
    const GridSpec& g = Yc.A.grid;
    const Vec3 origin{};
    SpectralVector3 Ah = fft_forward(Yc.A);
    SpectralVector3 Pih = fft_forward(Yc.Pi);
    const Vec3 alpha = charge_inner_hat(pr, Ah, origin);
    const Vec3 beta = moment_inner_hat(pr, Ah, origin);

    SpectralScalar dwork(g);
    Vec3 s;
    for (int n = 0; n < 3; ++n) {
        double acc = 0.0;
        for (int j = 0; j < 3; ++j) {
            derivative_hat(Ah[j], n, dwork);
            acc += spectral_pair(Pih[j], dwork);
        }
        s[n] = acc;
    }
    const Vec3 u = (Yc.P + s - alpha) / pp.mass;
    const Vec3 Om = (Yc.pi - beta) / pp.inertia;

    // (u . grad) as a multiplier i (u . k_eff)
    const GridSpec& gg = g;
    auto advect = [&](const SpectralVector3& Vh, SpectralVector3& out) {
        const int N = gg.N, nxh = N / 2 + 1;
        const bool par = kernels::parallel_enabled();
        for (int c = 0; c < 3; ++c) {
            const std::complex<double>* in = Vh[c].coeff.data();
            std::complex<double>* o = out[c].coeff.data();
#pragma omp parallel for schedule(static) if (par)
            for (int iz = 0; iz < N; ++iz) {
                for (int iy = 0; iy < N; ++iy) {
                    const double kyz = u.y * gg.k_eff(iy) + u.z * gg.k_eff(iz);
                    const std::int64_t base = (std::int64_t(iz) * N + iy) * nxh;
                    for (int ix = 0; ix < nxh; ++ix)
                        o[base + ix] = std::complex<double>(0.0, u.x * gg.k_eff(ix) + kyz) *
                                       in[base + ix];
                }
            }
        }
    };

    Cotangent out;
    // D_A = P[curl curl A - (u.grad)Pi - (u + Om^y) rho]
    SpectralVector3 work(g), acc(g);
    curl_hat(Ah, work);
    curl_hat(work, acc);
    advect(Pih, work);
    SpectralVector3 j = coupling_current_hat(pr, u, Om, origin);
    for (int c = 0; c < 3; ++c) {
        double* a = reinterpret_cast<double*>(acc[c].coeff.data());
        kernels::axpby(-1.0, reinterpret_cast<const double*>(work[c].coeff.data()), 1.0, a,
                       2 * acc[c].coeff.size());
        kernels::axpby(-1.0, reinterpret_cast<const double*>(j[c].coeff.data()), 1.0, a,
                       2 * acc[c].coeff.size());
    }
    leray_hat(acc);
    out.dA = fft_backward(std::move(acc));

    // D_Pi = P[Pi + (u.grad)A]
    SpectralVector3 dpi(g);
    advect(Ah, dpi);
    for (int c = 0; c < 3; ++c)
        kernels::axpby(1.0, reinterpret_cast<const double*>(Pih[c].coeff.data()), 1.0,
                       reinterpret_cast<double*>(dpi[c].coeff.data()), 2 * dpi[c].coeff.size());
    leray_hat(dpi);
    out.dPi = fft_backward(std::move(dpi));

    out.dq = Vec3{}; // H is q-independent in this frame
    out.dp = u;      // D_P
    out.dpi = Om;
    return out;
}

Mat3 hat(const Vec3& xi) {
    return Mat3{{{0.0, -xi.z, xi.y}, {xi.z, 0.0, -xi.x}, {-xi.y, xi.x, 0.0}}};
}

const std::vector<Mat3>& cubic_rotations() {
    static const std::vector<Mat3> rots = [] {
        std::vector<Mat3> out;
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : perms)
            for (int sx = -1; sx <= 1; sx += 2)
                for (int sy = -1; sy <= 1; sy += 2)
                    for (int sz = -1; sz <= 1; sz += 2) {
                        Mat3 M{};
                        const int sgn[3] = {sx, sy, sz};
                        for (int i = 0; i < 3; ++i) M[i][p[i]] = sgn[i];
                        const double det =
                            M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                            M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                            M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
                        if (det > 0.5) out.push_back(M);
                    }
        return out;
    }();
    return rots;
}

namespace {

bool is_signed_permutation(const Mat3& R) {
    for (int i = 0; i < 3; ++i) {
        int nz = 0;
        for (int j = 0; j < 3; ++j) {
            const double a = std::abs(R[i][j]);
            if (a > 1e-12 && std::abs(a - 1.0) > 1e-12) return false;
            if (a > 0.5) ++nz;
        }
        if (nz != 1) return false;
    }
    return true;
}

bool is_orthogonal(const Mat3& R) {
    const Mat3 I = matmul(R, transpose(R));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(I[i][j] - (i == j ? 1.0 : 0.0)) > 1e-10) return false;
    return true;
}

// exact gather: out_scalar(y) = f(R^-1 y) for signed permutations
ScalarField rotate_scalar_exact(const ScalarField& f, const Mat3& Rinv) {
    const GridSpec& g = f.grid;
    const int N = g.N;
    // axis a of the source index comes from output axis src[a] with sign sgn[a]
    int src[3];
    int sgn[3];
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (std::abs(Rinv[a][b]) > 0.5) {
                src[a] = b;
                sgn[a] = Rinv[a][b] > 0 ? 1 : -1;
            }
    ScalarField out(g);
    const bool par = kernels::parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (int iz = 0; iz < N; ++iz) {
        for (int iy = 0; iy < N; ++iy) {
            for (int ix = 0; ix < N; ++ix) {
                const int oidx[3] = {ix, iy, iz};
                int j[3];
                for (int a = 0; a < 3; ++a) {
                    const int i = oidx[src[a]];
                    j[a] = sgn[a] > 0 ? i : (N - i) % N;
                }
                out.at(ix, iy, iz) = f.at(j[0], j[1], j[2]);
            }
        }
    }
    return out;
}

// trilinear periodic resample for general rotations
ScalarField rotate_scalar_resampled(const ScalarField& f, const Mat3& Rinv) {
    const GridSpec& g = f.grid;
    const int N = g.N;
    const double h = g.h();
    ScalarField out(g);
    const bool par = kernels::parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (int iz = 0; iz < N; ++iz) {
        for (int iy = 0; iy < N; ++iy) {
            for (int ix = 0; ix < N; ++ix) {
                const Vec3 y{g.node(ix), g.node(iy), g.node(iz)};
                const Vec3 s = apply(Rinv, y);
                double t[3], fr[3];
                int i0[3];
                const double sc[3] = {s.x, s.y, s.z};
                for (int a = 0; a < 3; ++a) {
                    t[a] = (sc[a] + 0.5 * g.L) / h;
                    const double fl = std::floor(t[a]);
                    fr[a] = t[a] - fl;
                    i0[a] = int(fl) % N;
                    if (i0[a] < 0) i0[a] += N;
                }
                double acc = 0.0;
                for (int dz = 0; dz < 2; ++dz)
                    for (int dy = 0; dy < 2; ++dy)
                        for (int dx = 0; dx < 2; ++dx) {
                            const double w = (dx ? fr[0] : 1 - fr[0]) * (dy ? fr[1] : 1 - fr[1]) *
                                             (dz ? fr[2] : 1 - fr[2]);
                            acc += w * f.at((i0[0] + dx) % N, (i0[1] + dy) % N, (i0[2] + dz) % N);
                        }
                out.at(ix, iy, iz) = acc;
            }
        }
    }
    return out;
}

} // namespace

ComovingState rotate_state(const Mat3& R, const ComovingState& Yc, bool* used_resampling) {
    if (!is_orthogonal(R)) throw std::invalid_argument("rotation matrix not orthogonal");
    const bool exact = is_signed_permutation(R);
    if (used_resampling) *used_resampling = !exact;
    const Mat3 Rinv = transpose(R);
    ComovingState out(Yc.A.grid);
    std::array<ScalarField, 3> gA, gPi;
    for (int j = 0; j < 3; ++j) {
        gA[j] = exact ? rotate_scalar_exact(Yc.A[j], Rinv) : rotate_scalar_resampled(Yc.A[j], Rinv);
        gPi[j] =
            exact ? rotate_scalar_exact(Yc.Pi[j], Rinv) : rotate_scalar_resampled(Yc.Pi[j], Rinv);
    }
    const std::int64_t n = Yc.A.grid.node_count();
    for (int i = 0; i < 3; ++i) {
        kernels::fill(out.A[i].values.data(), 0.0, n);
        kernels::fill(out.Pi[i].values.data(), 0.0, n);
        for (int j = 0; j < 3; ++j) {
            if (R[i][j] == 0.0) continue;
            kernels::axpby(R[i][j], gA[j].values.data(), 1.0, out.A[i].values.data(), n);
            kernels::axpby(R[i][j], gPi[j].values.data(), 1.0, out.Pi[i].values.data(), n);
        }
    }
    out.q = apply(R, Yc.q);
    out.P = apply(R, Yc.P);
    out.pi = apply(R, Yc.pi);
    return out;
}

VectorField3 rotation_advect(const Vec3& xi, const VectorField3& V) {
    const GridSpec& g = V.grid;
    VectorField3 y = centered_coordinate(g, Vec3{});
    // w = xi ^ y
    VectorField3 w(g);
    const std::int64_t n = g.node_count();
    const bool par = kernels::parallel_enabled();
    {
        const double* yx = y[0].values.data();
        const double* yy = y[1].values.data();
        const double* yz = y[2].values.data();
        double* wx = w[0].values.data();
        double* wy = w[1].values.data();
        double* wz = w[2].values.data();
#pragma omp parallel for schedule(static) if (par)
        for (std::int64_t i = 0; i < n; ++i) {
            wx[i] = xi.y * yz[i] - xi.z * yy[i];
            wy[i] = xi.z * yx[i] - xi.x * yz[i];
            wz[i] = xi.x * yy[i] - xi.y * yx[i];
        }
    }
    SpectralVector3 Vh = fft_forward(V);
    SpectralScalar dwork(g);
    VectorField3 out(g);
    for (int c = 0; c < 3; ++c) {
        kernels::fill(out[c].values.data(), 0.0, n);
        for (int l = 0; l < 3; ++l) {
            derivative_hat(Vh[c], l, dwork);
            SpectralScalar tmp = dwork;
            ScalarField dV = fft_backward(std::move(tmp));
            kernels::multiply_add(w[l].values.data(), dV.values.data(), out[c].values.data(), n);
        }
    }
    return out;
}

VectorField3 rotation_generator(const Vec3& xi, const VectorField3& V) {
    const GridSpec& g = V.grid;
    VectorField3 out(g);
    VectorField3 adv = rotation_advect(xi, V);
    const std::int64_t n = g.node_count();
    const bool par = kernels::parallel_enabled();
    const double* vx = V[0].values.data();
    const double* vy = V[1].values.data();
    const double* vz = V[2].values.data();
    double* ox = out[0].values.data();
    double* oy = out[1].values.data();
    double* oz = out[2].values.data();
    const double* ax = adv[0].values.data();
    const double* ay = adv[1].values.data();
    const double* az = adv[2].values.data();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < n; ++i) {
        ox[i] = xi.y * vz[i] - xi.z * vy[i] - ax[i];
        oy[i] = xi.z * vx[i] - xi.x * vz[i] - ay[i];
        oz[i] = xi.x * vy[i] - xi.y * vx[i] - az[i];
    }
    return out;
}

Tangent deformation_field(const Vec3& xi, const ComovingState& Yc) {
    Tangent out;
    out.A_dot = rotation_generator(xi, Yc.A);
    out.Pi_dot = rotation_generator(xi, Yc.Pi);
    out.q_dot = cross(xi, Yc.q);
    out.p_dot = cross(xi, Yc.P);
    out.pi_dot = cross(xi, Yc.pi);
    return out;
}

} // namespace mlspin
