#pragma once

#include <cstddef>
#include <string_view>

// Double-precision inner loops shared by the layers and optimizers.
//
// Every kernel exists as a scalar reference implementation and, where the
// build target supports it, an AVX2 (x86-64) or NEON (aarch64) variant.
// The variant is picked at runtime from CPU features and can be overridden
// with select(). All variants are bit-exact against the scalar reference:
// per-element accumulation order is part of each kernel's contract, dot
// products use a fixed 4-bin lane split, and fused multiply-adds are used
// consistently (std::fma in the reference). The equivalence tests assert
// exact equality, not tolerance.

namespace affect::kernels {

enum class Backend { scalar, avx2, neon };

bool supported(Backend b);
Backend detect_best();
Backend active();
void select(Backend b);  // throws UsageError when unsupported on this CPU
std::string_view name(Backend b);

// C[m,n] (+)= A[m,k] . B[k,n]
void matmul_nn(std::size_t m, std::size_t k, std::size_t n,
               const double* a, const double* b, double* c, bool accumulate);

// C[m,n] (+)= A[m,k] . B[n,k]^T  (row-row dot products)
void matmul_nt(std::size_t m, std::size_t k, std::size_t n,
               const double* a, const double* b, double* c, bool accumulate);

// C[m,n] (+)= A[p,m]^T . B[p,n]
void matmul_tn(std::size_t p, std::size_t m, std::size_t n,
               const double* a, const double* b, double* c, bool accumulate);

// y[i] += alpha * x[i]
void axpy(std::size_t n, double alpha, const double* x, double* y);

// mat[r,c] += row[c] for every row r
void add_row_vector(std::size_t rows, std::size_t cols, double* mat, const double* row);

// Column-wise mean/max/min over a [rows, cols] matrix; rows >= 1.
void colwise_stats(std::size_t rows, std::size_t cols, const double* mat,
                   double* mean, double* cmax, double* cmin);

// In-place Adam step on one flat parameter tensor.
//   m = b1*m + (1-b1)*g;  v = b2*v + (1-b2)*g*g
//   w -= lr * (m*bc1) / (sqrt(v*bc2) + eps)
// bc1/bc2 are the precomputed 1/(1-b^t) bias corrections.
void adam_update(std::size_t n, double* w, const double* g, double* m, double* v,
                 double lr, double beta1, double beta2, double eps,
                 double bc1, double bc2);

}  // namespace affect::kernels
