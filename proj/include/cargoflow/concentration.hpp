#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cargoflow/distribution.hpp"

namespace cargoflow {

/// Sum of squared shares, on the [0, 1] scale.
double hhi(std::span<const double> shares);

/// Cumulative share of the min(k, n) largest categories.
double concentration_ratio(std::span<const double> shares, std::size_t k);

struct EntropyResult {
  double entropy = 0.0;     // nats
  double normalized = 0.0;  // entropy / ln(n); 0 when n == 1
};

EntropyResult shannon_entropy(std::span<const double> shares);

/// Inequality of category masses via the sorted-cumulative formula
///   G = (n + 1 - 2 * sum_i C_i / C_n) / n
/// with w_(1) <= ... <= w_(n) and C_i the running total.
double gini(std::span<const double> masses);

struct ConcentrationSummary {
  Dimension dimension = Dimension::Route;
  std::string scope;  // ALL / IMPORT / EXPORT
  std::size_t n = 0;
  double total_ffe = 0.0;
  double hhi = 0.0;
  std::map<int, double> cr;
  double entropy = 0.0;
  double entropy_norm = 0.0;
  double gini = 0.0;
};

ConcentrationSummary concentration_summary(const WeightedDistribution& dist,
                                           std::span<const int> ks,
                                           std::string scope_label = "ALL");

}  // namespace cargoflow
