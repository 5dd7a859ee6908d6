#pragma once

#include <cstddef>

namespace affect::kernels {

struct KernelTable {
    void (*matmul_nn)(std::size_t, std::size_t, std::size_t,
                      const double*, const double*, double*, bool);
    void (*matmul_nt)(std::size_t, std::size_t, std::size_t,
                      const double*, const double*, double*, bool);
    void (*matmul_tn)(std::size_t, std::size_t, std::size_t,
                      const double*, const double*, double*, bool);
    void (*axpy)(std::size_t, double, const double*, double*);
    void (*add_row_vector)(std::size_t, std::size_t, double*, const double*);
    void (*colwise_stats)(std::size_t, std::size_t, const double*,
                          double*, double*, double*);
    void (*adam_update)(std::size_t, double*, const double*, double*, double*,
                        double, double, double, double, double, double);
};

const KernelTable& scalar_table();

#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_table();
#endif

#if defined(__aarch64__)
const KernelTable& neon_table();
#endif

}  // namespace affect::kernels
