#include "cargoflow/temporal.hpp"

#include <limits>
#include <set>
#include <stdexcept>

#include "cargoflow/concentration.hpp"
#include "cargoflow/error.hpp"

namespace cargoflow {

std::map<int, WeightedDistribution> yearly_distributions(
    std::span<const ShipmentRecord> records, Dimension dimension,
    const RecordFilter& filter) {
  if (filter.year)
    throw std::invalid_argument(
        "yearly_distributions: filter must not pin a year");

  std::set<int> years;
  for (const ShipmentRecord& r : records) {
    if (filter.accepts(r)) years.insert(r.year);
  }
  if (years.empty())
    throw DataError("no records pass the filter for yearly distributions");

  std::map<int, WeightedDistribution> out;
  for (int year : years) {
    RecordFilter year_filter = filter;
    year_filter.year = year;
    out.emplace(year, build_distribution(records, dimension, year_filter));
  }
  return out;
}

DriftReport drift_series(const std::map<int, WeightedDistribution>& yearly,
                         std::optional<int> base_year, double log_base,
                         std::size_t exact_max_n, std::string scope_label) {
  if (yearly.empty()) throw DataError("drift_series: no yearly distributions");

  const int t0 = base_year.value_or(yearly.begin()->first);
  const auto base_it = yearly.find(t0);
  if (base_it == yearly.end()) {
    throw DataError("base year " + std::to_string(t0) +
                    " has no distribution");
  }
  const WeightedDistribution& base = base_it->second;

  DriftReport report;
  report.dimension = base.dimension();
  report.scope = std::move(scope_label);
  report.base_year = t0;
  report.jsd_log_base = log_base;

  for (const auto& [year, dist] : yearly) {
    const Alignment aligned = align(base, dist);
    DriftRow row;
    row.year = year;
    row.n = dist.size();
    row.total_ffe = dist.total();
    row.hhi = hhi(dist.shares());
    row.jsd_vs_base = js_distance(aligned.p, aligned.q, log_base);
    report.rows.push_back(row);
  }

  for (auto it = yearly.begin(); std::next(it) != yearly.end(); ++it) {
    const auto next_it = std::next(it);
    const Alignment aligned = align(it->second, next_it->second);
    AdjacentRankRow row;
    row.year_a = it->first;
    row.year_b = next_it->first;
    if (aligned.categories.size() >= 3) {
      row.spearman = spearman(aligned.p, aligned.q, exact_max_n);
    } else {
      // too few categories for a rank statistic; flagged undefined
      constexpr double nan = std::numeric_limits<double>::quiet_NaN();
      row.spearman = {nan, nan, false, PValueMethod::Asymptotic};
    }
    report.adjacent.push_back(row);
  }
  return report;
}

}  // namespace cargoflow
