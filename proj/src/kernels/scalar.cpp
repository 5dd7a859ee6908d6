#include "kernel_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

// Reference kernels. The SIMD variants must reproduce these bit-for-bit,
// so accumulation order is fixed: matmul_nn/_tn walk the contraction index
// outermost and fma into C, matmul_nt reduces each dot product through four
// interleaved bins combined as (b0+b2)+(b1+b3) plus a scalar tail.

namespace affect::kernels {
namespace {

void matmul_nn_scalar(std::size_t m, std::size_t k, std::size_t n,
                      const double* a, const double* b, double* c, bool accumulate) {
    if (!accumulate) std::memset(c, 0, m * n * sizeof(double));
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = c + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const double av = a[i * k + l];
            const double* brow = b + l * n;
            for (std::size_t j = 0; j < n; ++j)
                crow[j] = std::fma(av, brow[j], crow[j]);
        }
    }
}

double dot_binned(std::size_t k, const double* x, const double* y) {
    double bins[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t k4 = k - k % 4;
    for (std::size_t p = 0; p < k4; p += 4) {
        bins[0] = std::fma(x[p + 0], y[p + 0], bins[0]);
        bins[1] = std::fma(x[p + 1], y[p + 1], bins[1]);
        bins[2] = std::fma(x[p + 2], y[p + 2], bins[2]);
        bins[3] = std::fma(x[p + 3], y[p + 3], bins[3]);
    }
    double head = (bins[0] + bins[2]) + (bins[1] + bins[3]);
    double tail = 0.0;
    for (std::size_t p = k4; p < k; ++p) tail = std::fma(x[p], y[p], tail);
    return head + tail;
}

void matmul_nt_scalar(std::size_t m, std::size_t k, std::size_t n,
                      const double* a, const double* b, double* c, bool accumulate) {
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        for (std::size_t j = 0; j < n; ++j) {
            const double d = dot_binned(k, arow, b + j * k);
            c[i * n + j] = accumulate ? c[i * n + j] + d : d;
        }
    }
}

void matmul_tn_scalar(std::size_t p, std::size_t m, std::size_t n,
                      const double* a, const double* b, double* c, bool accumulate) {
    if (!accumulate) std::memset(c, 0, m * n * sizeof(double));
    for (std::size_t r = 0; r < p; ++r) {
        const double* brow = b + r * n;
        for (std::size_t i = 0; i < m; ++i) {
            const double av = a[r * m + i];
            double* crow = c + i * n;
            for (std::size_t j = 0; j < n; ++j)
                crow[j] = std::fma(av, brow[j], crow[j]);
        }
    }
}

void axpy_scalar(std::size_t n, double alpha, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(alpha, x[i], y[i]);
}

void add_row_vector_scalar(std::size_t rows, std::size_t cols, double* mat, const double* row) {
    for (std::size_t r = 0; r < rows; ++r) {
        double* m = mat + r * cols;
        for (std::size_t j = 0; j < cols; ++j) m[j] += row[j];
    }
}

void colwise_stats_scalar(std::size_t rows, std::size_t cols, const double* mat,
                          double* mean, double* cmax, double* cmin) {
    for (std::size_t j = 0; j < cols; ++j) {
        mean[j] = mat[j];
        cmax[j] = mat[j];
        cmin[j] = mat[j];
    }
    for (std::size_t r = 1; r < rows; ++r) {
        const double* m = mat + r * cols;
        for (std::size_t j = 0; j < cols; ++j) {
            mean[j] += m[j];
            cmax[j] = std::max(cmax[j], m[j]);
            cmin[j] = std::min(cmin[j], m[j]);
        }
    }
    const double den = static_cast<double>(rows);
    for (std::size_t j = 0; j < cols; ++j) mean[j] /= den;
}

void adam_update_scalar(std::size_t n, double* w, const double* g, double* m, double* v,
                        double lr, double beta1, double beta2, double eps,
                        double bc1, double bc2) {
    const double omb1 = 1.0 - beta1;
    const double omb2 = 1.0 - beta2;
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = std::fma(beta1, m[i], omb1 * g[i]);
        v[i] = std::fma(beta2, v[i], omb2 * (g[i] * g[i]));
        const double mhat = m[i] * bc1;
        const double vhat = v[i] * bc2;
        w[i] -= (lr * mhat) / (std::sqrt(vhat) + eps);
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t = {
        matmul_nn_scalar, matmul_nt_scalar, matmul_tn_scalar,
        axpy_scalar, add_row_vector_scalar, colwise_stats_scalar,
        adam_update_scalar,
    };
    return t;
}

}  // namespace affect::kernels
