#pragma once

#include <cstddef>
#include <span>

namespace cargoflow::kernels {

/// Reduction kernels shared by the metric modules.
///
/// Every kernel exists in two variants: a serial reference (`*_serial`)
/// and an OpenMP one (`*_parallel`). Both evaluate the identical
/// fixed-chunk association -- partial sums over kChunk-element blocks,
/// combined left to right -- so their results are bit-identical for any
/// thread count and the unsuffixed dispatchers can switch on input size
/// without perturbing downstream values.

inline constexpr std::size_t kChunk = 4096;
inline constexpr std::size_t kParallelCutoff = 1u << 15;

/// Sum of all elements.
double sum_serial(std::span<const double> v);
double sum_parallel(std::span<const double> v);
double sum(std::span<const double> v);

/// Sum of squared elements.
double sum_squares_serial(std::span<const double> v);
double sum_squares_parallel(std::span<const double> v);
double sum_squares(std::span<const double> v);

/// Sum of x * ln(x) over elements with x > 0; zeros contribute nothing.
double xlnx_sum_serial(std::span<const double> v);
double xlnx_sum_parallel(std::span<const double> v);
double xlnx_sum(std::span<const double> v);

/// Sum of p[i] * ln(p[i] / m[i]) over indices with p[i] > 0 (natural
/// log). Requires m[i] > 0 wherever p[i] > 0; sizes must match.
double kl_sum_serial(std::span<const double> p, std::span<const double> m);
double kl_sum_parallel(std::span<const double> p, std::span<const double> m);
double kl_sum(std::span<const double> p, std::span<const double> m);

}  // namespace cargoflow::kernels
