#pragma once

#include <span>
#include <vector>

#include "cargoflow/record.hpp"

namespace cargoflow {

/// Shipment-level FFE summary. std_dev uses the sample (n - 1)
/// denominator and is 0 for a single record; median and p75 interpolate
/// linearly between order statistics at position (n - 1) * q.
struct FfeSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  double min = 0.0;
  double median = 0.0;
  double p75 = 0.0;
  double max = 0.0;
};

FfeSummary ffe_summary(std::span<const ShipmentRecord> records);

struct AnnualTotalRow {
  int year = 0;
  Direction direction = Direction::Import;
  double total_ffe = 0.0;
};

/// FFE sums per (year, direction), sorted by year then by direction
/// token (EXPORT before IMPORT).
std::vector<AnnualTotalRow> annual_totals(
    std::span<const ShipmentRecord> records);

/// Equal-width bins in log10(FFE) space. Bins are half-open [lo, hi)
/// with the last bin closed; edges are reported back in FFE units. A
/// degenerate range (all values equal) is widened by a minimal offset so
/// every value lands in the first bin.
struct HistogramSpec {
  std::vector<double> edges;        // bin_count + 1, strictly ascending
  std::vector<std::size_t> counts;  // bin_count entries, conserving n
};

HistogramSpec log_histogram(std::span<const double> ffe_values,
                            std::size_t bin_count);

}  // namespace cargoflow
