#include "cargoflow/kernels.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

namespace cargoflow::kernels {
namespace {

// ChunkOp computes the partial over [lo, hi). Partials are combined
// strictly in chunk order, which pins the floating-point association.
template <typename ChunkOp>
double reduce_chunks_serial(std::size_t n, ChunkOp op) {
  if (n == 0) return 0.0;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  double acc = 0.0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = c * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    acc += op(lo, hi);
  }
  return acc;
}

template <typename ChunkOp>
double reduce_chunks_parallel(std::size_t n, ChunkOp op) {
  if (n == 0) return 0.0;
  const std::int64_t chunks =
      static_cast<std::int64_t>((n + kChunk - 1) / kChunk);
  std::vector<double> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    partial[static_cast<std::size_t>(c)] = op(lo, hi);
  }
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
}

struct SumOp {
  std::span<const double> v;
  double operator()(std::size_t lo, std::size_t hi) const {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
};

struct SumSquaresOp {
  std::span<const double> v;
  double operator()(std::size_t lo, std::size_t hi) const {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i] * v[i];
    return s;
  }
};

struct XLnXOp {
  std::span<const double> v;
  double operator()(std::size_t lo, std::size_t hi) const {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      if (v[i] > 0.0) s += v[i] * std::log(v[i]);
    }
    return s;
  }
};

struct KlOp {
  std::span<const double> p;
  std::span<const double> m;
  double operator()(std::size_t lo, std::size_t hi) const {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      if (p[i] > 0.0) s += p[i] * std::log(p[i] / m[i]);
    }
    return s;
  }
};

}  // namespace

double sum_serial(std::span<const double> v) {
  return reduce_chunks_serial(v.size(), SumOp{v});
}
double sum_parallel(std::span<const double> v) {
  return reduce_chunks_parallel(v.size(), SumOp{v});
}
double sum(std::span<const double> v) {
  return v.size() >= kParallelCutoff ? sum_parallel(v) : sum_serial(v);
}

double sum_squares_serial(std::span<const double> v) {
  return reduce_chunks_serial(v.size(), SumSquaresOp{v});
}
double sum_squares_parallel(std::span<const double> v) {
  return reduce_chunks_parallel(v.size(), SumSquaresOp{v});
}
double sum_squares(std::span<const double> v) {
  return v.size() >= kParallelCutoff ? sum_squares_parallel(v)
                                     : sum_squares_serial(v);
}

double xlnx_sum_serial(std::span<const double> v) {
  return reduce_chunks_serial(v.size(), XLnXOp{v});
}
double xlnx_sum_parallel(std::span<const double> v) {
  return reduce_chunks_parallel(v.size(), XLnXOp{v});
}
double xlnx_sum(std::span<const double> v) {
  return v.size() >= kParallelCutoff ? xlnx_sum_parallel(v)
                                     : xlnx_sum_serial(v);
}

double kl_sum_serial(std::span<const double> p, std::span<const double> m) {
  assert(p.size() == m.size());
  return reduce_chunks_serial(p.size(), KlOp{p, m});
}
double kl_sum_parallel(std::span<const double> p, std::span<const double> m) {
  assert(p.size() == m.size());
  return reduce_chunks_parallel(p.size(), KlOp{p, m});
}
double kl_sum(std::span<const double> p, std::span<const double> m) {
  return p.size() >= kParallelCutoff ? kl_sum_parallel(p, m)
                                     : kl_sum_serial(p, m);
}

}  // namespace cargoflow::kernels
