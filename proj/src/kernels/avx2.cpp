#include "kernel_table.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstring>

// AVX2+FMA variants. Same accumulation orders as scalar.cpp: vectors run
// across the non-contracted index, so every C element sees its terms in the
// reference order. Tails fall back to the scalar expressions.

namespace affect::kernels {
namespace {

inline double hsum_binned(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);    // bins 0,1
    const __m128d hi = _mm256_extractf128_pd(acc, 1);  // bins 2,3
    const __m128d s = _mm_add_pd(lo, hi);              // (b0+b2, b1+b3)
    return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

void matmul_nn_avx2(std::size_t m, std::size_t k, std::size_t n,
                    const double* a, const double* b, double* c, bool accumulate) {
    if (!accumulate) std::memset(c, 0, m * n * sizeof(double));
    const std::size_t n4 = n - n % 4;
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = c + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const double av = a[i * k + l];
            const __m256d avv = _mm256_set1_pd(av);
            const double* brow = b + l * n;
            std::size_t j = 0;
            for (; j < n4; j += 4) {
                __m256d cv = _mm256_loadu_pd(crow + j);
                cv = _mm256_fmadd_pd(avv, _mm256_loadu_pd(brow + j), cv);
                _mm256_storeu_pd(crow + j, cv);
            }
            for (; j < n; ++j) crow[j] = std::fma(av, brow[j], crow[j]);
        }
    }
}

void matmul_nt_avx2(std::size_t m, std::size_t k, std::size_t n,
                    const double* a, const double* b, double* c, bool accumulate) {
    const std::size_t k4 = k - k % 4;
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        for (std::size_t j = 0; j < n; ++j) {
            const double* brow = b + j * k;
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t p = 0; p < k4; p += 4)
                acc = _mm256_fmadd_pd(_mm256_loadu_pd(arow + p),
                                      _mm256_loadu_pd(brow + p), acc);
            double tail = 0.0;
            for (std::size_t p = k4; p < k; ++p) tail = std::fma(arow[p], brow[p], tail);
            const double d = hsum_binned(acc) + tail;
            c[i * n + j] = accumulate ? c[i * n + j] + d : d;
        }
    }
}

void matmul_tn_avx2(std::size_t p, std::size_t m, std::size_t n,
                    const double* a, const double* b, double* c, bool accumulate) {
    if (!accumulate) std::memset(c, 0, m * n * sizeof(double));
    const std::size_t n4 = n - n % 4;
    for (std::size_t r = 0; r < p; ++r) {
        const double* brow = b + r * n;
        for (std::size_t i = 0; i < m; ++i) {
            const double av = a[r * m + i];
            const __m256d avv = _mm256_set1_pd(av);
            double* crow = c + i * n;
            std::size_t j = 0;
            for (; j < n4; j += 4) {
                __m256d cv = _mm256_loadu_pd(crow + j);
                cv = _mm256_fmadd_pd(avv, _mm256_loadu_pd(brow + j), cv);
                _mm256_storeu_pd(crow + j, cv);
            }
            for (; j < n; ++j) crow[j] = std::fma(av, brow[j], crow[j]);
        }
    }
}

void axpy_avx2(std::size_t n, double alpha, const double* x, double* y) {
    const __m256d av = _mm256_set1_pd(alpha);
    const std::size_t n4 = n - n % 4;
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d yv = _mm256_loadu_pd(y + i);
        yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv);
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i) y[i] = std::fma(alpha, x[i], y[i]);
}

void add_row_vector_avx2(std::size_t rows, std::size_t cols, double* mat, const double* row) {
    const std::size_t c4 = cols - cols % 4;
    for (std::size_t r = 0; r < rows; ++r) {
        double* m = mat + r * cols;
        std::size_t j = 0;
        for (; j < c4; j += 4) {
            const __m256d mv = _mm256_add_pd(_mm256_loadu_pd(m + j), _mm256_loadu_pd(row + j));
            _mm256_storeu_pd(m + j, mv);
        }
        for (; j < cols; ++j) m[j] += row[j];
    }
}

void colwise_stats_avx2(std::size_t rows, std::size_t cols, const double* mat,
                        double* mean, double* cmax, double* cmin) {
    const std::size_t c4 = cols - cols % 4;
    std::size_t j = 0;
    for (; j < c4; j += 4) {
        __m256d sum = _mm256_loadu_pd(mat + j);
        __m256d mx = sum;
        __m256d mn = sum;
        for (std::size_t r = 1; r < rows; ++r) {
            const __m256d v = _mm256_loadu_pd(mat + r * cols + j);
            sum = _mm256_add_pd(sum, v);
            mx = _mm256_max_pd(mx, v);
            mn = _mm256_min_pd(mn, v);
        }
        _mm256_storeu_pd(mean + j, _mm256_div_pd(sum, _mm256_set1_pd(double(rows))));
        _mm256_storeu_pd(cmax + j, mx);
        _mm256_storeu_pd(cmin + j, mn);
    }
    for (; j < cols; ++j) {
        double sum = mat[j], mx = mat[j], mn = mat[j];
        for (std::size_t r = 1; r < rows; ++r) {
            const double v = mat[r * cols + j];
            sum += v;
            mx = std::max(mx, v);
            mn = std::min(mn, v);
        }
        mean[j] = sum / double(rows);
        cmax[j] = mx;
        cmin[j] = mn;
    }
}

void adam_update_avx2(std::size_t n, double* w, const double* g, double* m, double* v,
                      double lr, double beta1, double beta2, double eps,
                      double bc1, double bc2) {
    const double omb1 = 1.0 - beta1;
    const double omb2 = 1.0 - beta2;
    const __m256d b1v = _mm256_set1_pd(beta1);
    const __m256d b2v = _mm256_set1_pd(beta2);
    const __m256d omb1v = _mm256_set1_pd(omb1);
    const __m256d omb2v = _mm256_set1_pd(omb2);
    const __m256d lrv = _mm256_set1_pd(lr);
    const __m256d epsv = _mm256_set1_pd(eps);
    const __m256d bc1v = _mm256_set1_pd(bc1);
    const __m256d bc2v = _mm256_set1_pd(bc2);
    const std::size_t n4 = n - n % 4;
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        const __m256d gv = _mm256_loadu_pd(g + i);
        __m256d mv = _mm256_loadu_pd(m + i);
        __m256d vv = _mm256_loadu_pd(v + i);
        mv = _mm256_fmadd_pd(b1v, mv, _mm256_mul_pd(omb1v, gv));
        vv = _mm256_fmadd_pd(b2v, vv, _mm256_mul_pd(omb2v, _mm256_mul_pd(gv, gv)));
        _mm256_storeu_pd(m + i, mv);
        _mm256_storeu_pd(v + i, vv);
        const __m256d mhat = _mm256_mul_pd(mv, bc1v);
        const __m256d vhat = _mm256_mul_pd(vv, bc2v);
        const __m256d den = _mm256_add_pd(_mm256_sqrt_pd(vhat), epsv);
        const __m256d step = _mm256_div_pd(_mm256_mul_pd(lrv, mhat), den);
        _mm256_storeu_pd(w + i, _mm256_sub_pd(_mm256_loadu_pd(w + i), step));
    }
    for (; i < n; ++i) {
        m[i] = std::fma(beta1, m[i], omb1 * g[i]);
        v[i] = std::fma(beta2, v[i], omb2 * (g[i] * g[i]));
        const double mhat = m[i] * bc1;
        const double vhat = v[i] * bc2;
        w[i] -= (lr * mhat) / (std::sqrt(vhat) + eps);
    }
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t = {
        matmul_nn_avx2, matmul_nt_avx2, matmul_tn_avx2,
        axpy_avx2, add_row_vector_avx2, colwise_stats_avx2,
        adam_update_avx2,
    };
    return t;
}

}  // namespace affect::kernels

#endif  // x86-64
