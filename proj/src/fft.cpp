#include "mlspin/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

#include "mlspin/kernels.hpp"

namespace mlspin {

namespace {
std::mutex g_plan_mutex;
std::map<int, std::unique_ptr<Fft3>>& plan_registry() {
    static std::map<int, std::unique_ptr<Fft3>> reg;
    return reg;
}
} // namespace

Fft3::Fft3(int n) : n_(n) {
    std::vector<double> real(std::size_t(n) * n * n);
    std::vector<std::complex<double>> cplx(std::size_t(n) * n * (n / 2 + 1));
    // dims (z, y, x): x is the contiguous, halved axis
    fwd_ = fftw_plan_dft_r2c_3d(n, n, n, real.data(),
                                reinterpret_cast<fftw_complex*>(cplx.data()),
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    bwd_ = fftw_plan_dft_c2r_3d(n, n, n, reinterpret_cast<fftw_complex*>(cplx.data()),
                                real.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
}

const Fft3& Fft3::plan_for(int n) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto& reg = plan_registry();
    auto it = reg.find(n);
    if (it == reg.end()) it = reg.emplace(n, std::unique_ptr<Fft3>(new Fft3(n))).first;
    return *it->second;
}

void Fft3::forward(const double* in, std::complex<double>* out) const {
    fftw_execute_dft_r2c(static_cast<fftw_plan>(fwd_), const_cast<double*>(in),
                         reinterpret_cast<fftw_complex*>(out));
}

void Fft3::backward(std::complex<double>* in, double* out) const {
    fftw_execute_dft_c2r(static_cast<fftw_plan>(bwd_),
                         reinterpret_cast<fftw_complex*>(in), out);
}

SpectralScalar fft_forward(const ScalarField& f) {
    SpectralScalar out(f.grid);
    Fft3::plan_for(f.grid.N).forward(f.values.data(), out.coeff.data());
    return out;
}

SpectralVector3 fft_forward(const VectorField3& f) {
    SpectralVector3 out(f.grid);
    for (int c = 0; c < 3; ++c)
        Fft3::plan_for(f.grid.N).forward(f[c].values.data(), out[c].coeff.data());
    return out;
}

ScalarField fft_backward(SpectralScalar f) {
    ScalarField out(f.grid);
    Fft3::plan_for(f.grid.N).backward(f.coeff.data(), out.values.data());
    kernels::scale(out.values.data(), 1.0 / double(f.grid.node_count()), out.values.size());
    return out;
}

VectorField3 fft_backward(SpectralVector3 f) {
    VectorField3 out(f.grid);
    for (int c = 0; c < 3; ++c) {
        Fft3::plan_for(f.grid.N).backward(f[c].coeff.data(), out[c].values.data());
        kernels::scale(out[c].values.data(), 1.0 / double(f.grid.node_count()),
                       out[c].values.size());
    }
    return out;
}

} // namespace mlspin
