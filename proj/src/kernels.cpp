#include "netope/kernels.hpp"

#include <cmath>
#include <cstring>

#include "netope/errors.hpp"

namespace netope::kernels {

namespace detail {

double dot_scalar(const double* a, const double* b, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double* x, double alpha, size_t n) {
    for (size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void gemm_nn_scalar(size_t m, size_t k, size_t n, const double* a, const double* b, double* c) {
    std::memset(c, 0, m * n * sizeof(double));
    for (size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * n;
        for (size_t p = 0; p < k; ++p) {
            const double av = arow[p];
            if (av == 0.0) continue;
            const double* brow = b + p * n;
            for (size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void gemm_tn_scalar(size_t m, size_t k, size_t n, const double* a, const double* b, double* c) {
    std::memset(c, 0, k * n * sizeof(double));
    for (size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        const double* brow = b + i * n;
        for (size_t p = 0; p < k; ++p) {
            const double av = arow[p];
            if (av == 0.0) continue;
            double* crow = c + p * n;
            for (size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void gemm_nt_scalar(size_t m, size_t k, size_t n, const double* a, const double* b, double* c) {
    for (size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * n;
        for (size_t j = 0; j < n; ++j) crow[j] = dot_scalar(arow, b + j * k, k);
    }
}

void relu_scalar(const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward_scalar(const double* x, const double* dy, double* dx, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (x[i] > 0.0) dx[i] += dy[i];
}

}  // namespace detail

namespace {

bool avx2_available() {
#if defined(NETOPE_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend& backend_slot() {
    static Backend current = avx2_available() ? Backend::avx2 : Backend::scalar;
    return current;
}

}  // namespace

Backend active_backend() { return backend_slot(); }

bool backend_supported(Backend b) {
    return b == Backend::scalar || (b == Backend::avx2 && avx2_available());
}

void set_backend(Backend b) {
    if (!backend_supported(b)) throw parameter_error("kernel backend not supported on this CPU");
    backend_slot() = b;
}

std::string backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

#if defined(NETOPE_HAVE_AVX2)
#define NETOPE_DISPATCH(fn, ...)                                    \
    do {                                                            \
        if (backend_slot() == Backend::avx2)                        \
            return detail::fn##_avx2(__VA_ARGS__);                  \
        return detail::fn##_scalar(__VA_ARGS__);                    \
    } while (0)
#else
#define NETOPE_DISPATCH(fn, ...) return detail::fn##_scalar(__VA_ARGS__)
#endif

double dot(const double* a, const double* b, size_t n) { NETOPE_DISPATCH(dot, a, b, n); }

void axpy(double alpha, const double* x, double* y, size_t n) { NETOPE_DISPATCH(axpy, alpha, x, y, n); }

void scale(double* x, double alpha, size_t n) { NETOPE_DISPATCH(scale, x, alpha, n); }

void gemm_nn(size_t m, size_t k, size_t n, const double* a, const double* b, double* c) {
    NETOPE_DISPATCH(gemm_nn, m, k, n, a, b, c);
}

void gemm_tn(size_t m, size_t k, size_t n, const double* a, const double* b, double* c) {
    NETOPE_DISPATCH(gemm_tn, m, k, n, a, b, c);
}

void gemm_nt(size_t m, size_t k, size_t n, const double* a, const double* b, double* c) {
    NETOPE_DISPATCH(gemm_nt, m, k, n, a, b, c);
}

void relu(const double* x, double* y, size_t n) { NETOPE_DISPATCH(relu, x, y, n); }

void relu_backward(const double* x, const double* dy, double* dx, size_t n) {
    NETOPE_DISPATCH(relu_backward, x, dy, dx, n);
}

void sigmoid(const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] = 1.0 / (1.0 + std::exp(-x[i]));
}

#undef NETOPE_DISPATCH

}  // namespace netope::kernels
