#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "mlspin/vec3.hpp"

namespace mlspin {

/// Uniform periodic cubic grid. Nodes are x_i = -L/2 + i*h per axis,
/// i = 0..N-1, with h = L/N. Wavenumbers are k = 2*pi/L * m with integer
/// m in [-N/2, N/2); the Nyquist mode m = -N/2 is treated as zero by every
/// differentiation multiplier so that derivative operators stay
/// skew-adjoint on real grids.
struct GridSpec {
    double L = 0.0;
    int N = 0;

    GridSpec() = default;
    GridSpec(double box, int points) : L(box), N(points) {
        if (!(L > 0.0)) throw std::invalid_argument("grid: L must be positive");
        if (N < 8 || N % 2 != 0) throw std::invalid_argument("grid: N must be even and >= 8");
    }

    double h() const { return L / N; }
    std::int64_t node_count() const { return std::int64_t(N) * N * N; }
    std::int64_t spectral_count() const { return std::int64_t(N) * N * (N / 2 + 1); }

    double node(int i) const { return -0.5 * L + h() * i; }

    /// Signed integer mode for axis index i (full axis, not the halved one).
    int mode(int i) const { return i <= N / 2 ? i : i - N; }

    /// Differentiation wavenumber with the Nyquist mode zeroed.
    double k_eff(int i) const {
        int m = mode(i);
        if (m == N / 2 || m == -N / 2) return 0.0;
        return 2.0 * M_PI / L * m;
    }

    /// Wrap a coordinate difference into [-L/2, L/2).
    double wrap(double t) const { return t - L * std::floor(t / L + 0.5); }

    bool operator==(const GridSpec& o) const { return L == o.L && N == o.N; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (a != b) throw std::invalid_argument("grid mismatch");
}

} // namespace mlspin
