#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace mlspin::kernels {

/// Runtime switch for the OpenMP kernel paths. Results are bitwise
/// identical either way: reductions are chunked on fixed boundaries and
/// accumulated in a fixed serial order, so the thread count never changes
/// the floating-point evaluation order.
void set_parallel(bool on);
bool parallel_enabled();

/// Chunk size used for deterministic reductions (elements per partial).
inline constexpr std::int64_t reduce_chunk = 4096;

/// sum_i a[i]*b[i], deterministic.
double dot(const double* a, const double* b, std::int64_t n);

/// sum_i a[i]*b[i]*c[i], deterministic.
double dot3(const double* a, const double* b, const double* c, std::int64_t n);

/// sum_i a[i], deterministic.
double sum(const double* a, std::int64_t n);

/// max_i |a[i]|.
double max_abs(const double* a, std::int64_t n);

bool all_finite(const double* a, std::int64_t n);

/// y[i] = alpha*x[i] + beta*y[i]
void axpby(double alpha, const double* x, double beta, double* y, std::int64_t n);

/// out[i] = a[i]*b[i]
void multiply(const double* a, const double* b, double* out, std::int64_t n);

void scale(double* a, double s, std::int64_t n);
void fill(double* a, double v, std::int64_t n);

/// z[i] += a[i]*b[i]
void multiply_add(const double* a, const double* b, double* z, std::int64_t n);

/// Deterministic sum of Re(a[i]*conj(b[i]))*w[i] over the r2c half-spectrum,
/// where w is the multiplicity weight (1 on the ixh = 0 and ixh = N/2
/// planes, 2 elsewhere). nxh = N/2+1.
double pair_real(const std::complex<double>* a, const std::complex<double>* b,
                 int n, int nxh);

} // namespace mlspin::kernels
