#pragma once

#include <cstddef>
#include <string>

namespace netope::kernels {

// Dense inner-loop kernels. Every operation has a scalar reference
// implementation and, on x86-64 with AVX2+FMA, a vectorized variant. The
// active backend is chosen once at startup from CPUID and can be overridden
// (tests pin the scalar lane to compare against the SIMD lane).
enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_supported(Backend b);
void set_backend(Backend b);  // throws parameter_error if unsupported
std::string backend_name(Backend b);

double dot(const double* a, const double* b, size_t n);

// y += alpha * x
void axpy(double alpha, const double* x, double* y, size_t n);

// x *= alpha
void scale(double* x, double alpha, size_t n);

// C = A * B            (A: m×k, B: k×n, C: m×n, all row-major, C overwritten)
void gemm_nn(size_t m, size_t k, size_t n, const double* a, const double* b, double* c);

// C = A^T * B          (A: m×k stored row-major, result k×n)
void gemm_tn(size_t m, size_t k, size_t n, const double* a, const double* b, double* c);

// C = A * B^T          (A: m×k, B: n×k, result m×n)
void gemm_nt(size_t m, size_t k, size_t n, const double* a, const double* b, double* c);

// y = max(x, 0)
void relu(const double* x, double* y, size_t n);

// dx += dy where x > 0
void relu_backward(const double* x, const double* dy, double* dx, size_t n);

// y = 1 / (1 + exp(-x)); exp dominates, both lanes share the scalar loop.
void sigmoid(const double* x, double* y, size_t n);

namespace detail {
// Scalar reference lane, exposed so the equivalence tests can call it directly.
double dot_scalar(const double* a, const double* b, size_t n);
void axpy_scalar(double alpha, const double* x, double* y, size_t n);
void scale_scalar(double* x, double alpha, size_t n);
void gemm_nn_scalar(size_t m, size_t k, size_t n, const double* a, const double* b, double* c);
void gemm_tn_scalar(size_t m, size_t k, size_t n, const double* a, const double* b, double* c);
void gemm_nt_scalar(size_t m, size_t k, size_t n, const double* a, const double* b, double* c);
void relu_scalar(const double* x, double* y, size_t n);
void relu_backward_scalar(const double* x, const double* dy, double* dx, size_t n);

#if defined(NETOPE_HAVE_AVX2)
double dot_avx2(const double* a, const double* b, size_t n);
void axpy_avx2(double alpha, const double* x, double* y, size_t n);
void scale_avx2(double* x, double alpha, size_t n);
void gemm_nn_avx2(size_t m, size_t k, size_t n, const double* a, const double* b, double* c);
void gemm_tn_avx2(size_t m, size_t k, size_t n, const double* a, const double* b, double* c);
void gemm_nt_avx2(size_t m, size_t k, size_t n, const double* a, const double* b, double* c);
void relu_avx2(const double* x, double* y, size_t n);
void relu_backward_avx2(const double* x, const double* dy, double* dx, size_t n);
#endif
}  // namespace detail

}  // namespace netope::kernels
