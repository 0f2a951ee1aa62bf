#include "mlspin/kernels.hpp"

#include <atomic>
#include <cmath>

namespace mlspin::kernels {

namespace {
std::atomic<bool> g_parallel{true};

inline std::int64_t chunk_count(std::int64_t n) { return (n + reduce_chunk - 1) / reduce_chunk; }
} // namespace

void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }
bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }

double dot(const double* a, const double* b, std::int64_t n) {
    const std::int64_t nc = chunk_count(n);
    std::vector<double> partial(nc);
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t c = 0; c < nc; ++c) {
        const std::int64_t lo = c * reduce_chunk;
        const std::int64_t hi = std::min(n, lo + reduce_chunk);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) s += a[i] * b[i];
        partial[c] = s;
    }
    double total = 0.0;
    for (std::int64_t c = 0; c < nc; ++c) total += partial[c];
    return total;
}

double dot3(const double* a, const double* b, const double* c, std::int64_t n) {
    const std::int64_t nc = chunk_count(n);
    std::vector<double> partial(nc);
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t ch = 0; ch < nc; ++ch) {
        const std::int64_t lo = ch * reduce_chunk;
        const std::int64_t hi = std::min(n, lo + reduce_chunk);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) s += a[i] * b[i] * c[i];
        partial[ch] = s;
    }
    double total = 0.0;
    for (std::int64_t ch = 0; ch < nc; ++ch) total += partial[ch];
    return total;
}

double sum(const double* a, std::int64_t n) {
    const std::int64_t nc = chunk_count(n);
    std::vector<double> partial(nc);
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t c = 0; c < nc; ++c) {
        const std::int64_t lo = c * reduce_chunk;
        const std::int64_t hi = std::min(n, lo + reduce_chunk);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) s += a[i];
        partial[c] = s;
    }
    double total = 0.0;
    for (std::int64_t c = 0; c < nc; ++c) total += partial[c];
    return total;
}

double max_abs(const double* a, std::int64_t n) {
    const std::int64_t nc = chunk_count(n);
    std::vector<double> partial(nc, 0.0);
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t c = 0; c < nc; ++c) {
        const std::int64_t lo = c * reduce_chunk;
        const std::int64_t hi = std::min(n, lo + reduce_chunk);
        double m = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) m = std::max(m, std::abs(a[i]));
        partial[c] = m;
    }
    double m = 0.0;
    for (std::int64_t c = 0; c < nc; ++c) m = std::max(m, partial[c]);
    return m;
}

bool all_finite(const double* a, std::int64_t n) {
    const std::int64_t nc = chunk_count(n);
    std::vector<char> ok(nc, 1);
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t c = 0; c < nc; ++c) {
        const std::int64_t lo = c * reduce_chunk;
        const std::int64_t hi = std::min(n, lo + reduce_chunk);
        for (std::int64_t i = lo; i < hi; ++i)
            if (!std::isfinite(a[i])) { ok[c] = 0; break; }
    }
    for (std::int64_t c = 0; c < nc; ++c)
        if (!ok[c]) return false;
    return true;
}

void axpby(double alpha, const double* x, double beta, double* y, std::int64_t n) {
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < n; ++i) y[i] = alpha * x[i] + beta * y[i];
}

void multiply(const double* a, const double* b, double* out, std::int64_t n) {
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void multiply_add(const double* a, const double* b, double* z, std::int64_t n) {
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < n; ++i) z[i] += a[i] * b[i];
}

void scale(double* a, double s, std::int64_t n) {
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < n; ++i) a[i] *= s;
}

void fill(double* a, double v, std::int64_t n) {
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < n; ++i) a[i] = v;
}

double pair_real(const std::complex<double>* a, const std::complex<double>* b,
                 int n, int nxh) {
    // one partial per (iz,iy) line; lines are contiguous runs of nxh entries
    const std::int64_t lines = std::int64_t(n) * n;
    std::vector<double> partial(lines);
    const bool par = parallel_enabled();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t l = 0; l < lines; ++l) {
        const std::complex<double>* pa = a + l * nxh;
        const std::complex<double>* pb = b + l * nxh;
        double s = pa[0].real() * pb[0].real() + pa[0].imag() * pb[0].imag();
        for (int i = 1; i < nxh - 1; ++i)
            s += 2.0 * (pa[i].real() * pb[i].real() + pa[i].imag() * pb[i].imag());
        s += pa[nxh - 1].real() * pb[nxh - 1].real() + pa[nxh - 1].imag() * pb[nxh - 1].imag();
        partial[l] = s;
    }
    double total = 0.0;
    for (std::int64_t l = 0; l < lines; ++l) total += partial[l];
    return total;
}

} // namespace mlspin::kernels
