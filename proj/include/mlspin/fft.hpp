#pragma once

#include <complex>

#include "mlspin/field.hpp"

namespace mlspin {

/// Cached FFTW r2c/c2r plans for an N^3 cube, x axis contiguous and halved.
/// Plans are created once per N with FFTW_ESTIMATE (deterministic plan
/// choice run to run) and FFTW_UNALIGNED (valid for any buffer), and are
/// executed through the new-array interface, which is safe to call
/// concurrently on distinct buffers.
class Fft3 {
public:
    static const Fft3& plan_for(int n);

    /// Unnormalized forward transform; input is preserved.
    void forward(const double* in, std::complex<double>* out) const;

    /// Unnormalized inverse transform; the spectral input is destroyed
    /// (multidimensional c2r offers no preserve-input mode).
    void backward(std::complex<double>* in, double* out) const;

    int n() const { return n_; }

private:
    explicit Fft3(int n);
    int n_;
    void* fwd_;
    void* bwd_;
};

/// Forward transform of a field (unnormalized coefficients).
SpectralScalar fft_forward(const ScalarField& f);
SpectralVector3 fft_forward(const VectorField3& f);

/// Inverse transform including the 1/N^3 normalization. Consumes the input.
ScalarField fft_backward(SpectralScalar f);
VectorField3 fft_backward(SpectralVector3 f);

} // namespace mlspin
