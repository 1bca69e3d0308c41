#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "cargoflow/distribution.hpp"

namespace cargoflow {

/// Jensen-Shannon distance between two aligned share vectors: the square
/// root of the mean of the two KL divergences to the midpoint mixture.
/// With base-2 logs (the default) the result lies in [0, 1]. Inputs must
/// be equal-length and each sum to 1 within 1e-9.
double js_distance(std::span<const double> p, std::span<const double> q,
                   double log_base = 2.0);

enum class PValueMethod { ExactPermutation, Asymptotic };

std::string_view to_string(PValueMethod m);

/// Rank-correlation outcome. `defined` is false when the statistic does
/// not exist (zero rank variance / fully tied input); statistic and
/// p_value are NaN in that case rather than silent zeros.
struct CorrelationResult {
  double statistic = 0.0;
  double p_value = 1.0;
  bool defined = false;
  PValueMethod method = PValueMethod::Asymptotic;
};

/// Spearman's rho with midranks. Two-sided p-value by exact permutation
/// enumeration for n <= exact_max_n, and by the t approximation with
/// n - 2 degrees of freedom above it.
CorrelationResult spearman(std::span<const double> x,
                           std::span<const double> y,
                           std::size_t exact_max_n = 9);

/// Kendall's tau-b (tie-corrected), computed by merge-sort inversion
/// counting. Two-sided p-value by exact permutation enumeration for
/// n <= exact_max_n, else by the tie-corrected normal approximation.
CorrelationResult kendall(std::span<const double> x,
                          std::span<const double> y,
                          std::size_t exact_max_n = 9);

/// Per-industry log-ratio of export share to import share with epsilon
/// smoothing. Positive values mean export orientation. Exactly
/// antisymmetric under swapping the two maps.
struct OrientationTable {
  std::map<std::string, double> r;
  double epsilon = 1e-9;
};

OrientationTable orientation_index(
    const std::map<std::string, double>& export_shares,
    const std::map<std::string, double>& import_shares,
    double epsilon = 1e-9);

/// JSD plus both rank statistics over the aligned union support
/// (zero-share categories included).
struct AsymmetryReport {
  Dimension dimension = Dimension::Route;
  double jsd = 0.0;
  double jsd_log_base = 2.0;
  CorrelationResult spearman;
  CorrelationResult kendall;
  std::size_t union_n = 0;
};

AsymmetryReport asymmetry_report(const WeightedDistribution& p,
                                 const WeightedDistribution& q,
                                 double log_base = 2.0,
                                 std::size_t exact_max_n = 9);

}  // namespace cargoflow
