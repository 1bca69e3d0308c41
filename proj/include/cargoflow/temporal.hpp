#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cargoflow/distribution.hpp"
#include "cargoflow/divergence.hpp"

namespace cargoflow {

/// One distribution per observed year; years with no surviving records
/// are absent rather than empty. The filter's year field must be unset.
std::map<int, WeightedDistribution> yearly_distributions(
    std::span<const ShipmentRecord> records, Dimension dimension,
    const RecordFilter& filter = {});

struct DriftRow {
  int year = 0;
  std::size_t n = 0;
  double total_ffe = 0.0;
  double hhi = 0.0;
  double jsd_vs_base = 0.0;
};

struct AdjacentRankRow {
  int year_a = 0;
  int year_b = 0;
  CorrelationResult spearman;
};

/// Per-year structure plus drift against the base year. Each (base, t)
/// pair is aligned over the union of just those two supports, and the
/// JSD uses the same log base everywhere (recorded in the report).
struct DriftReport {
  Dimension dimension = Dimension::Route;
  std::string scope;
  int base_year = 0;
  double jsd_log_base = 2.0;
  std::vector<DriftRow> rows;          // ordered by year
  std::vector<AdjacentRankRow> adjacent;
};

/// base_year defaults to the earliest observed year. Throws DataError
/// when the requested base year is absent.
DriftReport drift_series(const std::map<int, WeightedDistribution>& yearly,
                         std::optional<int> base_year = std::nullopt,
                         double log_base = 2.0, std::size_t exact_max_n = 9,
                         std::string scope_label = "ALL");

}  // namespace cargoflow
