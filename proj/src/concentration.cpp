#include "cargoflow/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "cargoflow/kernels.hpp"

namespace cargoflow {
namespace {

void check_shares(std::span<const double> shares) {
  if (shares.empty())
    throw std::invalid_argument("share vector must not be empty");
  double total = 0.0;
  for (double s : shares) {
    if (s < 0.0) throw std::invalid_argument("negative share");
    total += s;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("shares must sum to 1");
}

}  // namespace

double hhi(std::span<const double> shares) {
  check_shares(shares);
  return kernels::sum_squares(shares);
}

double concentration_ratio(std::span<const double> shares, std::size_t k) {
  check_shares(shares);
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  std::vector<double> sorted(shares.begin(), shares.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::size_t take = std::min(k, sorted.size());
  double cr = 0.0;
  for (std::size_t i = 0; i < take; ++i) cr += sorted[i];
  return cr;
}

EntropyResult shannon_entropy(std::span<const double> shares) {
  check_shares(shares);
  const double h = -kernels::xlnx_sum(shares);
  const std::size_t n = shares.size();
  return {h, n >= 2 ? h / std::log(static_cast<double>(n)) : 0.0};
}

double gini(std::span<const double> masses) {
  if (masses.empty())
    throw std::invalid_argument("mass vector must not be empty");
  for (double w : masses) {
    if (!(w > 0.0)) throw std::invalid_argument("masses must be positive");
  }
  std::vector<double> sorted(masses.begin(), masses.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  double running = 0.0;
  double cumulative_sum = 0.0;  // sum of C_i
  for (double w : sorted) {
    running += w;
    cumulative_sum += running;
  }
  const double cn = running;
  return (static_cast<double>(n) + 1.0 - 2.0 * (cumulative_sum / cn)) /
         static_cast<double>(n);
}

ConcentrationSummary concentration_summary(const WeightedDistribution& dist,
                                           std::span<const int> ks,
                                           std::string scope_label) {
  const std::vector<double> shares = dist.shares();
  const std::vector<double> masses = dist.masses();

  ConcentrationSummary out;
  out.dimension = dist.dimension();
  out.scope = std::move(scope_label);
  out.n = dist.size();
  out.total_ffe = dist.total();
  out.hhi = hhi(shares);
  for (int k : ks) {
    if (k < 1) throw std::invalid_argument("cr k values must be >= 1");
    out.cr[k] = concentration_ratio(shares, static_cast<std::size_t>(k));
  }
  const EntropyResult h = shannon_entropy(shares);
  out.entropy = h.entropy;
  out.entropy_norm = h.normalized;
  out.gini = gini(masses);
  return out;
}

}  // namespace cargoflow
