#include "mlspin/hamiltonian.hpp"

namespace mlspin {

namespace {

Mat3 hat_matrix(const Vec3& w) {
    return Mat3{{{0.0, -w.z, w.y}, {w.z, 0.0, -w.x}, {-w.y, w.x, 0.0}}};
}

// w(x) = v + omega ^ (x - q) sampled with the wrapped centered coordinate
VectorField3 velocity_field(const GridSpec& g, const Vec3& v, const Vec3& omega, const Vec3& q) {
    VectorField3 w = centered_coordinate(g, q);
    const int64_t n = g.node_count();
    VectorField3 out(g);
    const bool par = kernels::parallel_enabled();
    const double* yx = w[0].values.data();
    const double* yy = w[1].values.data();
    const double* yz = w[2].values.data();
#pragma omp parallel for schedule(static) if (par)
    for (int64_t i = 0; i < n; ++i) {
        out[0].values[i] = v.x + omega.y * yz[i] - omega.z * yy[i];
        out[1].values[i] = v.y + omega.z * yx[i] - omega.x * yz[i];
        out[2].values[i] = v.z + omega.x * yy[i] - omega.y * yx[i];
    }
    return out;
}

} // namespace

Velocities velocities_hat(const State& Y, const SpectralVector3& Ah, const ChargeProfile& pr,
                          const ParticleParams& pp) {
    Velocities out;
    out.a_pair = charge_inner_hat(pr, Ah, Y.q);
    out.b_pair = moment_inner_hat(pr, Ah, Y.q);
    out.v = (Y.p - out.a_pair) / pp.mass;
    out.omega = (Y.pi - out.b_pair) / pp.inertia;
    return out;
}

Velocities velocities(const State& Y, const ChargeProfile& pr, const ParticleParams& pp) {
    return velocities_hat(Y, fft_forward(Y.A), pr, pp);
}

double hamiltonian(const State& Y, const ChargeProfile& pr, const ParticleParams& pp) {
    require_same_grid(Y.A.grid, pr.grid);
    SpectralVector3 Ah = fft_forward(Y.A);
    const Velocities vel = velocities_hat(Y, Ah, pr, pp);
    SpectralVector3 cAh(Y.A.grid);
    curl_hat(Ah, cAh);
    VectorField3 cA = fft_backward(std::move(cAh));
    const Vec3 pa = Y.p - vel.a_pair;
    const Vec3 pb = Y.pi - vel.b_pair;
    return 0.5 * inner_product(Y.Pi, Y.Pi) + 0.5 * inner_product(cA, cA) +
           dot(pa, pa) / (2.0 * pp.mass) + dot(pb, pb) / (2.0 * pp.inertia);
}

SpectralVector3 coupling_current_hat(const ChargeProfile& pr, const Vec3& v, const Vec3& omega,
                                     const Vec3& q) {
    const GridSpec& g = pr.grid;
    const ShiftPhase ph = make_shift_phase(g, q);
    SpectralScalar rq(g);
    apply_shift(pr.rho_hat, ph, rq);
    const Mat3 W = hat_matrix(omega); // column l is omega ^ e_l
    SpectralVector3 out(g);
    const std::int64_t n = g.spectral_count();
    const bool par = kernels::parallel_enabled();
    std::array<SpectralScalar, 3> mq;
    for (int l = 0; l < 3; ++l) {
        mq[l] = SpectralScalar(g);
        apply_shift(pr.moment_hat[l], ph, mq[l]);
    }
    for (int m = 0; m < 3; ++m) {
        std::complex<double>* o = out[m].coeff.data();
        const double vm = v[m];
        const std::complex<double>* r = rq.coeff.data();
        const std::complex<double>* m0 = mq[0].coeff.data();
        const std::complex<double>* m1 = mq[1].coeff.data();
        const std::complex<double>* m2 = mq[2].coeff.data();
        const double w0 = W[m][0], w1 = W[m][1], w2 = W[m][2];
#pragma omp parallel for schedule(static) if (par)
        for (std::int64_t i = 0; i < n; ++i)
            o[i] = vm * r[i] + w0 * m0[i] + w1 * m1[i] + w2 * m2[i];
    }
    return out;
}

Cotangent grad_hamiltonian(const State& Y, const ChargeProfile& pr, const ParticleParams& pp) {
    require_same_grid(Y.A.grid, pr.grid);
    const GridSpec& g = Y.A.grid;
    SpectralVector3 Ah = fft_forward(Y.A);
    const Velocities vel = velocities_hat(Y, Ah, pr, pp);

    Cotangent out;
    out.dPi = Y.Pi;

    // D_A H = P(curl curl A - w rho(.-q)), assembled spectrally
    SpectralVector3 work(g), cc(g);
    curl_hat(Ah, work);
    curl_hat(work, cc);
    SpectralVector3 j = coupling_current_hat(pr, vel.v, vel.omega, Y.q);
    for (int c = 0; c < 3; ++c)
        kernels::axpby(-1.0, reinterpret_cast<const double*>(j[c].coeff.data()), 1.0,
                       reinterpret_cast<double*>(cc[c].coeff.data()), 2 * cc[c].coeff.size());
    leray_hat(cc);
    out.dA = fft_backward(std::move(cc));

    // D_q H: chain rule through the translated kernels
    const Mat3 dr = drho_pairings(pr, Ah, Y.q);        // [m][j] = <A_m, d_j rho(.-q)>
    const auto dm = dmoment_pairings(pr, Ah, Y.q);     // [l][m][j]
    for (int jx = 0; jx < 3; ++jx) {
        double s = 0.0;
        for (int m = 0; m < 3; ++m) s += vel.v[m] * dr[m][jx];
        // omega . (eps_{nlm} <A_m, d_j (y_l rho)>)
        s += vel.omega.x * (dm[1][2][jx] - dm[2][1][jx]);
        s += vel.omega.y * (dm[2][0][jx] - dm[0][2][jx]);
        s += vel.omega.z * (dm[0][1][jx] - dm[1][0][jx]);
        out.dq[jx] = s;
    }
    out.dp = vel.v;
    out.dpi = vel.omega;
    return out;
}

Tangent structural_apply(const Vec3& pi, const Cotangent& Z) {
    Tangent out;
    out.A_dot = Z.dPi;
    out.Pi_dot = Z.dA;
    for (int c = 0; c < 3; ++c)
        kernels::scale(out.Pi_dot[c].values.data(), -1.0, out.Pi_dot[c].values.size());
    out.q_dot = Z.dp;
    out.p_dot = -Z.dq;
    out.pi_dot = -cross(pi, Z.dpi);
    return out;
}

Tangent structural_apply(const State& Y, const Cotangent& Z) {
    return structural_apply(Y.pi, Z);
}

Tangent rhs(const State& Y, const ChargeProfile& pr, const ParticleParams& pp) {
    return structural_apply(Y.pi, grad_hamiltonian(Y, pr, pp));
}

double pairing(const Cotangent& Z, const Tangent& T) {
    return inner_product(Z.dA, T.A_dot) + inner_product(Z.dPi, T.Pi_dot) + dot(Z.dq, T.q_dot) +
           dot(Z.dp, T.p_dot) + dot(Z.dpi, T.pi_dot);
}

DerivedQuantities derived_quantities(const State& Y, const ChargeProfile& pr,
                                     const ParticleParams& pp) {
    DerivedQuantities out;
    const Velocities vel = velocities(Y, pr, pp);
    out.v = vel.v;
    out.omega = vel.omega;
    out.Phi = coulomb_potential(pr, Y.q);
    out.B = curl(Y.A);
    VectorField3 gp = gradient(out.Phi);
    out.E = VectorField3(Y.A.grid);
    for (int c = 0; c < 3; ++c) {
        const std::int64_t n = Y.A.grid.node_count();
        const bool par = kernels::parallel_enabled();
        const double* pi_c = Y.Pi[c].values.data();
        const double* gp_c = gp[c].values.data();
        double* e = out.E[c].values.data();
#pragma omp parallel for schedule(static) if (par)
        for (std::int64_t i = 0; i < n; ++i) e[i] = -pi_c[i] - gp_c[i];
    }
    return out;
}

std::pair<Vec3, Vec3> lorentz_force_torque(const State& Y, const ChargeProfile& pr,
                                           const ParticleParams& pp) {
    const GridSpec& g = Y.A.grid;
    const DerivedQuantities dq = derived_quantities(Y, pr, pp);
    VectorField3 w = velocity_field(g, dq.v, dq.omega, Y.q);
    VectorField3 F(g);
    const std::int64_t n = g.node_count();
    const bool par = kernels::parallel_enabled();
    {
        const double* wx = w[0].values.data();
        const double* wy = w[1].values.data();
        const double* wz = w[2].values.data();
        const double* bx = dq.B[0].values.data();
        const double* by = dq.B[1].values.data();
        const double* bz = dq.B[2].values.data();
        const double* ex = dq.E[0].values.data();
        const double* ey = dq.E[1].values.data();
        const double* ez = dq.E[2].values.data();
        double* fx = F[0].values.data();
        double* fy = F[1].values.data();
        double* fz = F[2].values.data();
#pragma omp parallel for schedule(static) if (par)
        for (std::int64_t i = 0; i < n; ++i) {
            fx[i] = ex[i] + wy[i] * bz[i] - wz[i] * by[i];
            fy[i] = ey[i] + wz[i] * bx[i] - wx[i] * bz[i];
            fz[i] = ez[i] + wx[i] * by[i] - wy[i] * bx[i];
        }
    }
    SpectralVector3 Fh = fft_forward(F);
    return {charge_inner_hat(pr, Fh, Y.q), moment_inner_hat(pr, Fh, Y.q)};
}

std::pair<double, double> newton_lorentz_residual(const State& Y, const ChargeProfile& pr,
                                                  const ParticleParams& pp) {
    SpectralVector3 Ah = fft_forward(Y.A);
    const Tangent t = rhs(Y, pr, pp);

    // da/dt = <Adot, rho(.-q)> - sum_j <A, d_j rho(.-q)> qdot_j, likewise db/dt
    SpectralVector3 Adoth = fft_forward(t.A_dot);
    Vec3 adot = charge_inner_hat(pr, Adoth, Y.q);
    Vec3 bdot = moment_inner_hat(pr, Adoth, Y.q);
    const Mat3 dr = drho_pairings(pr, Ah, Y.q);
    const auto dm = dmoment_pairings(pr, Ah, Y.q);
    for (int m = 0; m < 3; ++m)
        for (int j = 0; j < 3; ++j) adot[m] -= dr[m][j] * t.q_dot[j];
    for (int j = 0; j < 3; ++j) {
        bdot.x -= (dm[1][2][j] - dm[2][1][j]) * t.q_dot[j];
        bdot.y -= (dm[2][0][j] - dm[0][2][j]) * t.q_dot[j];
        bdot.z -= (dm[0][1][j] - dm[1][0][j]) * t.q_dot[j];
    }
    const Vec3 m_qddot = t.p_dot - adot;
    const Vec3 I_omdot = t.pi_dot - bdot;
    const auto [force, torque] = lorentz_force_torque(Y, pr, pp);
    const double fres = norm_inf(m_qddot - force) / std::max(norm_inf(force), 1e-300);
    const double tres = norm_inf(I_omdot - torque) / std::max(norm_inf(torque), 1e-300);
    return {fres, tres};
}

} // namespace mlspin
