#include "mlspin/momentum_map.hpp"

#include <cmath>

namespace mlspin {

namespace {

double h3(const GridSpec& g) { return g.h() * g.h() * g.h(); }

// h^3 * sum of (a ^ b)_n over nodes
Vec3 integral_cross(const GridSpec& g, const VectorField3& a, const VectorField3& b) {
    const std::int64_t n = g.node_count();
    Vec3 out;
    out.x = kernels::dot(a[1].values.data(), b[2].values.data(), n) -
            kernels::dot(a[2].values.data(), b[1].values.data(), n);
    out.y = kernels::dot(a[2].values.data(), b[0].values.data(), n) -
            kernels::dot(a[0].values.data(), b[2].values.data(), n);
    out.z = kernels::dot(a[0].values.data(), b[1].values.data(), n) -
            kernels::dot(a[1].values.data(), b[0].values.data(), n);
    return h3(g) * out;
}

VectorField3 pointwise_cross(const VectorField3& a, const VectorField3& b) {
    const GridSpec& g = a.grid;
    VectorField3 out(g);
    const std::int64_t n = g.node_count();
    const bool par = kernels::parallel_enabled();
    const double* ax = a[0].values.data();
    const double* ay = a[1].values.data();
    const double* az = a[2].values.data();
    const double* bx = b[0].values.data();
    const double* by = b[1].values.data();
    const double* bz = b[2].values.data();
    double* ox = out[0].values.data();
    double* oy = out[1].values.data();
    double* oz = out[2].values.data();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < n; ++i) {
        ox[i] = ay[i] * bz[i] - az[i] * by[i];
        oy[i] = az[i] * bx[i] - ax[i] * bz[i];
        oz[i] = ax[i] * by[i] - ay[i] * bx[i];
    }
    return out;
}

double max_div(const VectorField3& F) {
    ScalarField d = divergence(F);
    return kernels::max_abs(d.values.data(), d.values.size());
}

double rel_field_residual(const VectorField3& got, const VectorField3& want) {
    VectorField3 diff = got;
    for (int c = 0; c < 3; ++c)
        kernels::axpby(-1.0, want[c].values.data(), 1.0, diff[c].values.data(),
                       diff[c].values.size());
    const double denom = field_norm(want);
    return denom > 0.0 ? field_norm(diff) / denom : field_norm(diff);
}

} // namespace

Vec3 angular_star_inner(const VectorField3& A, const VectorField3& Pi, const Vec3& q) {
    require_same_grid(A.grid, Pi.grid);
    const GridSpec& g = A.grid;
    VectorField3 y = centered_coordinate(g, q);
    SpectralVector3 Ah = fft_forward(A);
    SpectralScalar dwork(g);
    const std::int64_t n = g.node_count();
    // out_n = sum_c sum_{l,m} eps_{nlm} h^3 sum_x y_l dA_c/dx_m Pi_c
    Mat3 M{}; // M[l][m] = sum_c <y_l * d_m A_c, Pi_c>
    for (int c = 0; c < 3; ++c) {
        for (int m = 0; m < 3; ++m) {
            derivative_hat(Ah[c], m, dwork);
            SpectralScalar tmp = dwork;
            ScalarField dA = fft_backward(std::move(tmp));
            for (int l = 0; l < 3; ++l) {
                if (l == m) continue; // eps vanishes on the diagonal pairs used below
                M[l][m] += kernels::dot3(y[l].values.data(), dA.values.data(),
                                         Pi[c].values.data(), n);
            }
        }
    }
    return h3(g) * Vec3{M[1][2] - M[2][1], M[2][0] - M[0][2], M[0][1] - M[1][0]};
}

double j_xi(const ComovingState& Yc, const Vec3& xi) {
    VectorField3 genA = rotation_generator(xi, Yc.A);
    return inner_product(genA, Yc.Pi) + dot(cross(xi, Yc.q), Yc.P) + dot(xi, Yc.pi);
}

Vec3 angular_momentum(const ComovingState& Yc) {
    const GridSpec& g = Yc.A.grid;
    const Vec3 field_part = integral_cross(g, Yc.A, Yc.Pi);
    const Vec3 star_part = angular_star_inner(Yc.A, Yc.Pi, Vec3{});
    return field_part - star_part + cross(Yc.q, Yc.P) + Yc.pi;
}

ClassicalInvariants classical_invariants(const State& Y, const ChargeProfile& pr,
                                         const ParticleParams& pp) {
    const GridSpec& g = Y.A.grid;
    const DerivedQuantities dq = derived_quantities(Y, pr, pp);
    VectorField3 S = pointwise_cross(dq.E, dq.B);
    ClassicalInvariants out;
    Vec3 sumS;
    for (int c = 0; c < 3; ++c) sumS[c] = kernels::sum(S[c].values.data(), S[c].values.size());
    out.P_c = h3(g) * sumS + pp.mass * dq.v;

    VectorField3 x = centered_coordinate(g, Vec3{});
    Vec3 xS = integral_cross(g, x, S);
    VectorField3 yq = centered_coordinate(g, Y.q);
    out.counterterm = (pr.Q / (g.L * g.L * g.L)) * integral_cross(g, yq, Y.A);
    out.J_c = xS + pp.inertia * dq.omega + cross(Y.q, pp.mass * dq.v) + out.counterterm;
    return out;
}

double MomentumMapReport::max_residual() const {
    double m = 0.0;
    for (double v : {res_A, res_Pi, res_q, res_P, res_pi, fd_A, fd_Pi, fd_q, fd_P, fd_pi})
        m = std::max(m, v);
    return m;
}

MomentumMapReport verify_momentum_map(const ComovingState& Yc, const Vec3& xi) {
    MomentumMapReport rep;
    const Tangent vxi = deformation_field(xi, Yc);

    // DJ_xi read off the variational equations
    Cotangent DJ(Yc.A.grid);
    DJ.dPi = vxi.A_dot;
    DJ.dA = vxi.Pi_dot;
    for (int c = 0; c < 3; ++c)
        kernels::scale(DJ.dA[c].values.data(), -1.0, DJ.dA[c].values.size());
    DJ.dp = cross(xi, Yc.q);        // D_P slot
    DJ.dq = -cross(xi, Yc.P);
    DJ.dpi = xi;

    const Tangent F = structural_apply(Yc.pi, DJ);
    rep.res_A = rel_field_residual(F.A_dot, vxi.A_dot);
    rep.res_Pi = rel_field_residual(F.Pi_dot, vxi.Pi_dot);
    rep.res_q = norm_inf(F.q_dot - vxi.q_dot);
    rep.res_P = norm_inf(F.p_dot - vxi.p_dot);
    rep.res_pi = norm_inf(F.pi_dot - vxi.pi_dot);
    rep.div_A = max_div(vxi.A_dot);
    rep.div_Pi = max_div(vxi.Pi_dot);

    // cross-check DJ against central finite differences of j_xi;
    // directions: the state's own fields (j_xi is linear in each block)
    const double j0 = j_xi(Yc, xi);
    const double scale = std::max(std::abs(j0), 1.0);
    {
        const double eps = 1e-5;
        ComovingState Yp = Yc, Ym = Yc;
        add_scaled(Yp.A, Yc.Pi, eps);
        add_scaled(Ym.A, Yc.Pi, -eps);
        const double fd = (j_xi(Yp, xi) - j_xi(Ym, xi)) / (2 * eps);
        const double an = inner_product(DJ.dA, Yc.Pi);
        rep.fd_A = std::abs(fd - an) / std::max(std::abs(an), scale * 1e-3);
        Yp = Yc;
        Ym = Yc;
        add_scaled(Yp.Pi, Yc.A, eps);
        add_scaled(Ym.Pi, Yc.A, -eps);
        const double fd2 = (j_xi(Yp, xi) - j_xi(Ym, xi)) / (2 * eps);
        const double an2 = inner_product(DJ.dPi, Yc.A);
        rep.fd_Pi = std::abs(fd2 - an2) / std::max(std::abs(an2), scale * 1e-3);
    }
    for (int jc = 0; jc < 3; ++jc) {
        const double eps = 1e-6;
        auto fd_of = [&](Vec3 ComovingState::* blk, int j) {
            ComovingState Yp = Yc, Ym = Yc;
            (Yp.*blk)[j] += eps;
            (Ym.*blk)[j] -= eps;
            return (j_xi(Yp, xi) - j_xi(Ym, xi)) / (2 * eps);
        };
        rep.fd_q = std::max(rep.fd_q,
                            std::abs(fd_of(&ComovingState::q, jc) - DJ.dq[jc]) / scale);
        rep.fd_P = std::max(rep.fd_P,
                            std::abs(fd_of(&ComovingState::P, jc) - DJ.dp[jc]) / scale);
        rep.fd_pi = std::max(rep.fd_pi,
                             std::abs(fd_of(&ComovingState::pi, jc) - DJ.dpi[jc]) / scale);
    }
    return rep;
}

ClassicalIdentityReport verify_classical_identity(const State& Y, const ChargeProfile& pr,
                                                  const ParticleParams& pp) {
    ClassicalIdentityReport rep;
    const ComovingState Yc = to_comoving(Y);
    rep.J = angular_momentum(Yc);
    rep.P = Yc.P;
    const ClassicalInvariants ci = classical_invariants(Y, pr, pp);
    rep.J_c = ci.J_c;
    rep.P_c = ci.P_c;
    rep.counterterm = ci.counterterm;
    rep.res_J_rel = norm_inf(rep.J - rep.J_c) / std::max(norm(rep.J), 1e-300);
    rep.res_P_rel = norm_inf(rep.P - rep.P_c) / std::max(norm(rep.P), 1e-300);

    // partial-integration identity: -int y^(grad Phi ^ curl A)
    //   = <y^A, rho> - (Q/L^3) int y^A, every piece assembled independently
    const GridSpec& g = Y.A.grid;
    ScalarField Phi0 = coulomb_potential(pr, Vec3{});
    VectorField3 gP = gradient(Phi0);
    VectorField3 cA = curl(Yc.A);
    VectorField3 inner_cross = pointwise_cross(gP, cA);
    VectorField3 y = centered_coordinate(g, Vec3{});
    const Vec3 lhs = -1.0 * integral_cross(g, y, inner_cross);
    SpectralVector3 Ah = fft_forward(Yc.A);
    const Vec3 moment = moment_inner_hat(pr, Ah, Vec3{});
    const Vec3 bg = (pr.Q / (g.L * g.L * g.L)) * integral_cross(g, y, Yc.A);
    rep.res_ek0 = norm_inf(lhs - (moment - bg));
    return rep;
}

RotationInvarianceReport verify_rotation_invariance(const ComovingState& Yc,
                                                    const ChargeProfile& pr,
                                                    const ParticleParams& pp) {
    RotationInvarianceReport rep;
    const double H0 = comoving_hamiltonian(Yc, pr, pp);
    const Vec3 gs0 = grad_star_inner(Yc.Pi, Yc.A);
    for (const Mat3& R : cubic_rotations()) {
        const ComovingState Yr = rotate_state(R, Yc);
        rep.max_dH = std::max(rep.max_dH, std::abs(comoving_hamiltonian(Yr, pr, pp) - H0));
        const Vec3 gs = grad_star_inner(Yr.Pi, Yr.A);
        rep.max_grad_star = std::max(rep.max_grad_star, norm_inf(gs - apply(R, gs0)));
    }
    rep.max_dH_rel = rep.max_dH / std::max(std::abs(H0), 1e-300);
    return rep;
}

double lie_derivative_H(const ComovingState& Yc, const Vec3& xi, const ChargeProfile& pr,
                        const ParticleParams& pp) {
    const Cotangent DH = grad_comoving_hamiltonian(Yc, pr, pp);
    const Tangent vxi = deformation_field(xi, Yc);
    return pairing(DH, vxi);
}

InvariantRecord make_invariant_record(double t, const State& Y, const ChargeProfile& pr,
                                      const ParticleParams& pp) {
    InvariantRecord rec;
    rec.t = t;
    rec.H = hamiltonian(Y, pr, pp);
    const ComovingState Yc = to_comoving(Y);
    rec.P = Yc.P;
    rec.J = angular_momentum(Yc);
    const ClassicalInvariants ci = classical_invariants(Y, pr, pp);
    rec.P_c = ci.P_c;
    rec.J_c = ci.J_c;
    rec.pi_norm = norm(Y.pi);
    rec.div_A_max = max_div(Y.A);
    rec.div_Pi_max = max_div(Y.Pi);

    // Gauss law under the neutralizing-background convention
    const GridSpec& g = Y.A.grid;
    const DerivedQuantities dq = derived_quantities(Y, pr, pp);
    ScalarField divE = divergence(dq.E);
    ScalarField rho_q = fft_backward(shifted_rho_hat(pr, Y.q));
    const double bg = pr.Q / (g.L * g.L * g.L);
    const std::int64_t n = g.node_count();
    std::vector<double> resid(n);
    const bool par = kernels::parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < n; ++i)
        resid[i] = divE.values[i] - (rho_q.values[i] - bg);
    rec.gauss_residual = kernels::max_abs(resid.data(), n);
    return rec;
}

} // namespace mlspin
