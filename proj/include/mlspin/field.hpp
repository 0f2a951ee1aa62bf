#pragma once

#include <array>
#include <complex>
#include <vector>

#include "mlspin/grid.hpp"

namespace mlspin {

/// Real scalar samples on all N^3 nodes, x-fastest:
/// values[(iz*N + iy)*N + ix].
struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g) : grid(g), values(g.node_count(), 0.0) {}

    double& at(int ix, int iy, int iz) {
        return values[(std::int64_t(iz) * grid.N + iy) * grid.N + ix];
    }
    double at(int ix, int iy, int iz) const {
        return values[(std::int64_t(iz) * grid.N + iy) * grid.N + ix];
    }
};

/// Three component scalar fields on one grid.
struct VectorField3 {
    GridSpec grid;
    std::array<ScalarField, 3> comp;

    VectorField3() = default;
    explicit VectorField3(const GridSpec& g)
        : grid(g), comp{ScalarField(g), ScalarField(g), ScalarField(g)} {}

    ScalarField& operator[](int i) { return comp[i]; }
    const ScalarField& operator[](int i) const { return comp[i]; }
};

/// Complex spectral coefficients in FFTW r2c layout: the x axis is halved,
/// coeff[(iz*N + iy)*(N/2+1) + ixh] with ixh = 0..N/2.
struct SpectralScalar {
    GridSpec grid;
    std::vector<std::complex<double>> coeff;

    SpectralScalar() = default;
    explicit SpectralScalar(const GridSpec& g) : grid(g), coeff(g.spectral_count(), 0.0) {}
};

struct SpectralVector3 {
    GridSpec grid;
    std::array<SpectralScalar, 3> comp;

    SpectralVector3() = default;
    explicit SpectralVector3(const GridSpec& g)
        : grid(g), comp{SpectralScalar(g), SpectralScalar(g), SpectralScalar(g)} {}

    SpectralScalar& operator[](int i) { return comp[i]; }
    const SpectralScalar& operator[](int i) const { return comp[i]; }
};

} // namespace mlspin
