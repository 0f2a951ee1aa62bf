#include "mlspin/charge.hpp"

#include <atomic>
#include <cmath>
#include <iostream>

#include "mlspin/kernels.hpp"

namespace mlspin {

namespace {

double bump(double r2, double R) {
    const double R2 = R * R;
    if (r2 >= R2) return 0.0;
    return std::exp(-R2 / (R2 - r2));
}

/// Gauss-Legendre nodes/weights on [0, b] by Newton iteration.
void gauss_legendre(int n, double b, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = 0.5 * b * (1.0 + t);
        w[i] = b / ((1.0 - t * t) * dp * dp);
    }
}

struct RadialTables {
    // rho1[s]: continuum FT of the bump at kappa = 2*pi/L*sqrt(s)
    // gdot[s]: rho1'(kappa)/kappa at the same shell (FT of y_l*rho is i*gdot*k_l)
    std::vector<double> rho1, gdot;
};

RadialTables radial_transform(double R, const GridSpec& g) {
    const int smax = 3 * (g.N / 2) * (g.N / 2);
    RadialTables t;
    t.rho1.assign(smax + 1, 0.0);
    t.gdot.assign(smax + 1, 0.0);
    constexpr int nq = 256;
    std::vector<double> r, w;
    gauss_legendre(nq, R, r, w);
    std::vector<double> f(nq);
    for (int i = 0; i < nq; ++i) f[i] = w[i] * r[i] * r[i] * bump(r[i] * r[i], R);
    const bool par = kernels::parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (int s = 0; s <= smax; ++s) {
        const double kap = 2.0 * M_PI / g.L * std::sqrt(double(s));
        double a = 0.0, bsum = 0.0;
        if (s == 0) {
            for (int i = 0; i < nq; ++i) {
                a += f[i];
                bsum += -f[i] * r[i] * r[i] / 3.0;
            }
        } else {
            for (int i = 0; i < nq; ++i) {
                const double kr = kap * r[i];
                const double sinc = std::sin(kr) / kr;
                a += f[i] * sinc;
                bsum += f[i] * (std::cos(kr) - sinc) / (kap * kap);
            }
        }
        t.rho1[s] = 4.0 * M_PI * a;
        t.gdot[s] = 4.0 * M_PI * bsum;
    }
    return t;
}

std::atomic<bool> g_seam_warned{false};

void warn_if_near_seam(const ChargeProfile& pr, const Vec3& q) {
    const GridSpec& g = pr.grid;
    const Vec3 qw{g.wrap(q.x), g.wrap(q.y), g.wrap(q.z)};
    const double margin = 0.5 * g.L - norm_inf(qw);
    if (margin < pr.R_rho + 2.0 * g.h() && !g_seam_warned.exchange(true))
        std::cerr << "mlspin: warning: charge support within 2h of the wrap seam "
                     "(|q|_inf = " << norm_inf(qw) << ", L/2 = " << 0.5 * g.L << ")\n";
}

} // namespace

ChargeProfile ChargeProfile::create(double R_rho, double Q, const GridSpec& grid) {
    if (!(R_rho > 0.0)) throw std::invalid_argument("charge: R_rho must be positive");
    if (!(2.0 * R_rho < 0.5 * grid.L))
        throw std::invalid_argument("charge support exceeds box margin");

    ChargeProfile pr;
    pr.grid = grid;
    pr.R_rho = R_rho;
    pr.Q = Q;
    pr.rho = ScalarField(grid);
    pr.rho_hat = SpectralScalar(grid);
    for (int l = 0; l < 3; ++l) pr.moment_hat[l] = SpectralScalar(grid);

    const int N = grid.N;

    // exact samples; C from midpoint quadrature of the raw bump
    double raw_sum = 0.0;
    for (int iz = 0; iz < N; ++iz)
        for (int iy = 0; iy < N; ++iy)
            for (int ix = 0; ix < N; ++ix) {
                const double x = grid.node(ix), y = grid.node(iy), z = grid.node(iz);
                const double v = bump(x * x + y * y + z * z, R_rho);
                pr.rho.at(ix, iy, iz) = v;
                raw_sum += v;
            }
    const double h3 = grid.h() * grid.h() * grid.h();
    pr.C = raw_sum > 0.0 ? Q / (h3 * raw_sum) : 0.0;
    kernels::scale(pr.rho.values.data(), pr.C, pr.rho.values.size());

    if (Q == 0.0) {
        pr.r2_moment = 0.0;
        return pr; // identically zero profile
    }

    RadialTables tab = radial_transform(R_rho, grid);
    const double scale = (Q / h3) / tab.rho1[0]; // force rho_hat(0) = Q/h^3
    pr.r2_moment = -3.0 * tab.gdot[0] * scale * h3;

    const int nxh = N / 2 + 1;
    const bool par = kernels::parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (int iz = 0; iz < N; ++iz) {
        const int mz = grid.mode(iz);
        for (int iy = 0; iy < N; ++iy) {
            const int my = grid.mode(iy);
            const std::int64_t base = (std::int64_t(iz) * N + iy) * nxh;
            for (int ix = 0; ix < nxh; ++ix) {
                const int mx = ix; // half axis: mode = index
                const int s = mx * mx + my * my + mz * mz;
                // physical center sits at index N/2 on each axis
                const double sign = ((mx + my + mz) & 1) ? -1.0 : 1.0;
                const bool corner = (mx == 0 || mx == N / 2) && (my == 0 || my == N / 2) &&
                                    (mz == 0 || mz == N / 2) && s != 0;
                pr.rho_hat.coeff[base + ix] = corner ? 0.0 : sign * scale * tab.rho1[s];
                const double gd = sign * scale * tab.gdot[s];
                const std::complex<double> i(0.0, 1.0);
                pr.moment_hat[0].coeff[base + ix] = i * gd * grid.k_eff(ix);
                pr.moment_hat[1].coeff[base + ix] = i * gd * grid.k_eff(iy);
                pr.moment_hat[2].coeff[base + ix] = i * gd * grid.k_eff(iz);
            }
        }
    }
    return pr;
}

ShiftPhase make_shift_phase(const GridSpec& g, const Vec3& q) {
    ShiftPhase ph;
    const Vec3 qw{g.wrap(q.x), g.wrap(q.y), g.wrap(q.z)};
    ph.x.resize(g.N / 2 + 1);
    ph.y.resize(g.N);
    ph.z.resize(g.N);
    for (int i = 0; i <= g.N / 2; ++i) ph.x[i] = std::polar(1.0, -g.k_eff(i) * qw.x);
    for (int i = 0; i < g.N; ++i) ph.y[i] = std::polar(1.0, -g.k_eff(i) * qw.y);
    for (int i = 0; i < g.N; ++i) ph.z[i] = std::polar(1.0, -g.k_eff(i) * qw.z);
    return ph;
}

void apply_shift(const SpectralScalar& in, const ShiftPhase& ph, SpectralScalar& out) {
    const GridSpec& g = in.grid;
    const int N = g.N, nxh = N / 2 + 1;
    const bool par = kernels::parallel_enabled();
    const std::complex<double>* src = in.coeff.data();
    std::complex<double>* dst = out.coeff.data();
#pragma omp parallel for schedule(static) if (par)
    for (int iz = 0; iz < N; ++iz) {
        for (int iy = 0; iy < N; ++iy) {
            const std::complex<double> pzy = ph.z[iz] * ph.y[iy];
            const std::int64_t base = (std::int64_t(iz) * N + iy) * nxh;
            for (int ix = 0; ix < nxh; ++ix) dst[base + ix] = src[base + ix] * pzy * ph.x[ix];
        }
    }
}

double spectral_pair(const SpectralScalar& fh, const SpectralScalar& gh) {
    require_same_grid(fh.grid, gh.grid);
    const GridSpec& g = fh.grid;
    const double h3 = g.h() * g.h() * g.h();
    return h3 / double(g.node_count()) *
           kernels::pair_real(fh.coeff.data(), gh.coeff.data(), g.N, g.N / 2 + 1);
}

Vec3 charge_inner_hat(const ChargeProfile& pr, const SpectralVector3& Fh, const Vec3& q) {
    require_same_grid(pr.grid, Fh.grid);
    const ShiftPhase ph = make_shift_phase(pr.grid, q);
    SpectralScalar kq(pr.grid);
    apply_shift(pr.rho_hat, ph, kq);
    Vec3 out;
    for (int m = 0; m < 3; ++m) out[m] = spectral_pair(Fh[m], kq);
    return out;
}

Vec3 charge_inner(const ChargeProfile& pr, const VectorField3& F, const Vec3& q) {
    require_same_grid(pr.grid, F.grid);
    return charge_inner_hat(pr, fft_forward(F), q);
}

Vec3 moment_inner_hat(const ChargeProfile& pr, const SpectralVector3& Fh, const Vec3& q) {
    require_same_grid(pr.grid, Fh.grid);
    warn_if_near_seam(pr, q);
    const ShiftPhase ph = make_shift_phase(pr.grid, q);
    SpectralScalar kq(pr.grid);
    Mat3 M{}; // M[l][m] = <F_m, (y_l rho)(.-q)>
    for (int l = 0; l < 3; ++l) {
        apply_shift(pr.moment_hat[l], ph, kq);
        for (int m = 0; m < 3; ++m) M[l][m] = spectral_pair(Fh[m], kq);
    }
    return {M[1][2] - M[2][1], M[2][0] - M[0][2], M[0][1] - M[1][0]};
}

Vec3 moment_inner(const ChargeProfile& pr, const VectorField3& F, const Vec3& q) {
    require_same_grid(pr.grid, F.grid);
    return moment_inner_hat(pr, fft_forward(F), q);
}

SpectralScalar shifted_rho_hat(const ChargeProfile& pr, const Vec3& q) {
    SpectralScalar out(pr.grid);
    apply_shift(pr.rho_hat, make_shift_phase(pr.grid, q), out);
    return out;
}

ScalarField coulomb_potential(const ChargeProfile& pr, const Vec3& q) {
    SpectralScalar rq = shifted_rho_hat(pr, q);
    kernels::scale(reinterpret_cast<double*>(rq.coeff.data()), -1.0, 2 * rq.coeff.size());
    SpectralScalar out(pr.grid);
    laplacian_inverse_hat(rq, out);
    return fft_backward(std::move(out));
}

Mat3 drho_pairings(const ChargeProfile& pr, const SpectralVector3& Fh, const Vec3& q) {
    const ShiftPhase ph = make_shift_phase(pr.grid, q);
    SpectralScalar shifted(pr.grid), dk(pr.grid);
    apply_shift(pr.rho_hat, ph, shifted);
    Mat3 out{};
    for (int j = 0; j < 3; ++j) {
        derivative_hat(shifted, j, dk);
        for (int m = 0; m < 3; ++m) out[m][j] = spectral_pair(Fh[m], dk);
    }
    return out;
}

std::array<Mat3, 3> dmoment_pairings(const ChargeProfile& pr, const SpectralVector3& Fh,
                                     const Vec3& q) {
    const ShiftPhase ph = make_shift_phase(pr.grid, q);
    SpectralScalar shifted(pr.grid), dk(pr.grid);
    std::array<Mat3, 3> out{};
    for (int l = 0; l < 3; ++l) {
        apply_shift(pr.moment_hat[l], ph, shifted);
        for (int j = 0; j < 3; ++j) {
            derivative_hat(shifted, j, dk);
            for (int m = 0; m < 3; ++m) out[l][m][j] = spectral_pair(Fh[m], dk);
        }
    }
    return out;
}

} // namespace mlspin
