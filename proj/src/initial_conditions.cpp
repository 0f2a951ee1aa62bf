#include "mlspin/initial_conditions.hpp"

#include <random>

#include "mlspin/comoving.hpp"

namespace mlspin {

FieldInitSpec::Kind field_kind_from_string(const std::string& s) {
    if (s == "zero") return FieldInitSpec::Kind::zero;
    if (s == "random-localized") return FieldInitSpec::Kind::random_localized;
    if (s == "soliton-guess") return FieldInitSpec::Kind::soliton_guess;
    throw std::invalid_argument("fields.type must be \"zero\", \"random-localized\" or "
                                "\"soliton-guess\" (got \"" + s + "\")");
}

VectorField3 random_localized_field(const GridSpec& g, std::uint64_t seed,
                                    double envelope_radius, double amplitude,
                                    const Vec3& center) {
    constexpr int max_mode = 3;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // low-band random W per component: sum of a*cos(k.x) + b*sin(k.x) over
    // modes in [-3,3]^3 (canonical half, fixed draw order)
    struct ModeCoeff {
        double kx, ky, kz, a, b;
    };
    std::array<std::vector<ModeCoeff>, 3> modes;
    for (int c = 0; c < 3; ++c) {
        for (int mx = 0; mx <= max_mode; ++mx)
            for (int my = (mx == 0 ? 0 : -max_mode); my <= max_mode; ++my)
                for (int mz = ((mx == 0 && my == 0) ? 0 : -max_mode); mz <= max_mode; ++mz) {
                    if (mx == 0 && my == 0 && mz == 0) continue;
                    const double k0 = 2.0 * M_PI / g.L;
                    modes[c].push_back(
                        {k0 * mx, k0 * my, k0 * mz, gauss(rng), gauss(rng)});
                }
    }

    const double sigma = envelope_radius / 3.0;
    VectorField3 W(g);
    const int N = g.N;
    const bool par = kernels::parallel_enabled();
    for (int c = 0; c < 3; ++c) {
        const auto& mc = modes[c];
        double* out = W[c].values.data();
#pragma omp parallel for schedule(static) if (par)
        for (int iz = 0; iz < N; ++iz) {
            const double z = g.node(iz);
            for (int iy = 0; iy < N; ++iy) {
                const double y = g.node(iy);
                const std::int64_t base = (std::int64_t(iz) * N + iy) * N;
                for (int ix = 0; ix < N; ++ix) {
                    const double x = g.node(ix);
                    const double yx = g.wrap(x - center.x);
                    const double yy = g.wrap(y - center.y);
                    const double yz = g.wrap(z - center.z);
                    const double env =
                        std::exp(-(yx * yx + yy * yy + yz * yz) / (2.0 * sigma * sigma));
                    double s = 0.0;
                    for (const ModeCoeff& m : mc) {
                        const double ph = m.kx * x + m.ky * y + m.kz * z;
                        s += m.a * std::cos(ph) + m.b * std::sin(ph);
                    }
                    out[base + ix] = env * s;
                }
            }
        }
    }
    VectorField3 F = curl(W);
    const double nrm = field_norm(F);
    if (nrm > 0.0)
        for (int c = 0; c < 3; ++c)
            kernels::scale(F[c].values.data(), amplitude / nrm, F[c].values.size());
    return F;
}

namespace {

State soliton_guess(const ChargeProfile& pr, const ParticleParams& pp, const Vec3& q0,
                    const Vec3& p0, const Vec3& pi0) {
    const GridSpec& g = pr.grid;
    const Vec3 v0 = p0 / pp.mass;
    const Vec3 om0 = pi0 / pp.inertia;
    // magnetostatic vector potential of the rigid current: -lap A = P(w rho)
    SpectralVector3 j = coupling_current_hat(pr, v0, om0, q0);
    leray_hat(j);
    SpectralVector3 Ah(g);
    for (int c = 0; c < 3; ++c) {
        laplacian_inverse_hat(j[c], Ah[c]);
        kernels::scale(reinterpret_cast<double*>(Ah[c].coeff.data()), -1.0,
                       2 * Ah[c].coeff.size());
    }
    State Y(g);
    Y.A = fft_backward(std::move(Ah));
    Y.q = q0;
    SpectralVector3 Ah2 = fft_forward(Y.A);
    Y.p = pp.mass * v0 + charge_inner_hat(pr, Ah2, q0);
    Y.pi = pp.inertia * om0 + moment_inner_hat(pr, Ah2, q0);
    return Y;
}

} // namespace

State build_initial_state(const ChargeProfile& pr, const ParticleParams& pp, const Vec3& q0,
                          const Vec3& p0, const Vec3& pi0, const FieldInitSpec& spec) {
    const GridSpec& g = pr.grid;
    switch (spec.kind) {
    case FieldInitSpec::Kind::zero: {
        State Y(g);
        Y.q = q0;
        Y.p = p0;
        Y.pi = pi0;
        return Y;
    }
    case FieldInitSpec::Kind::random_localized: {
        State Y(g);
        Y.A = random_localized_field(g, spec.seed, spec.envelope_radius, kRandomAmpA, q0);
        Y.Pi = random_localized_field(g, spec.seed + 0x9e3779b97f4a7c15ull,
                                      spec.envelope_radius, kRandomAmpPi, q0);
        Y.q = q0;
        Y.p = p0;
        Y.pi = pi0;
        return Y;
    }
    case FieldInitSpec::Kind::soliton_guess:
        return soliton_guess(pr, pp, q0, p0, pi0);
    }
    throw std::logic_error("unreachable field kind");
}

} // namespace mlspin
