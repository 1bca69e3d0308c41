#include "cargoflow/profile.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "cargoflow/distribution.hpp"
#include "cargoflow/kernels.hpp"

namespace cargoflow {
namespace {

double interpolated_quantile(const std::vector<double>& sorted, double q) {
  const double pos = static_cast<double>(sorted.size() - 1) * q;
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

FfeSummary ffe_summary(std::span<const ShipmentRecord> records) {
  if (records.empty())
    throw std::invalid_argument("ffe_summary: no records");

  std::vector<double> values;
  values.reserve(records.size());
  for (const ShipmentRecord& r : records) values.push_back(r.ffe);
  std::sort(values.begin(), values.end());

  FfeSummary out;
  out.count = values.size();
  out.mean = kernels::sum(values) / static_cast<double>(values.size());
  out.min = values.front();
  out.max = values.back();
  out.median = interpolated_quantile(values, 0.5);
  out.p75 = interpolated_quantile(values, 0.75);

  if (values.size() > 1) {
    std::vector<double> sq_dev(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double d = values[i] - out.mean;
      sq_dev[i] = d * d;
    }
    out.std_dev = std::sqrt(kernels::sum(sq_dev) /
                            static_cast<double>(values.size() - 1));
  }
  return out;
}

std::vector<AnnualTotalRow> annual_totals(
    std::span<const ShipmentRecord> records) {
  if (records.empty())
    throw std::invalid_argument("annual_totals: no records");

  // key sorts EXPORT before IMPORT within a year, matching the
  // direction-token alphabetical order used in rendered tables
  std::map<std::pair<int, std::string>, std::vector<double>> groups;
  for (const ShipmentRecord& r : records) {
    groups[{r.year, std::string(to_string(r.direction))}].push_back(r.ffe);
  }

  std::vector<AnnualTotalRow> out;
  out.reserve(groups.size());
  for (auto& [key, values] : groups) {
    AnnualTotalRow row;
    row.year = key.first;
    row.direction = *parse_direction(key.second);
    row.total_ffe = stable_mass_sum(std::move(values));
    out.push_back(row);
  }
  return out;
}

HistogramSpec log_histogram(std::span<const double> ffe_values,
                            std::size_t bin_count) {
  if (ffe_values.empty())
    throw std::invalid_argument("log_histogram: no values");
  if (bin_count == 0)
    throw std::invalid_argument("log_histogram: bin_count must be >= 1");

  std::vector<double> logs;
  logs.reserve(ffe_values.size());
  for (double v : ffe_values) {
    if (!(v > 0.0))
      throw std::invalid_argument("log_histogram: values must be positive");
    logs.push_back(std::log10(v));
  }

  const auto [lo_it, hi_it] = std::minmax_element(logs.begin(), logs.end());
  const double lo = *lo_it;
  double hi = *hi_it;
  if (hi - lo < 1e-12) hi = lo + 1e-9;  // degenerate range

  const double width = (hi - lo) / static_cast<double>(bin_count);
  HistogramSpec spec;
  spec.counts.assign(bin_count, 0);
  spec.edges.reserve(bin_count + 1);
  for (std::size_t j = 0; j <= bin_count; ++j) {
    spec.edges.push_back(
        std::pow(10.0, lo + width * static_cast<double>(j)));
  }

  for (double lv : logs) {
    auto idx = static_cast<std::size_t>((lv - lo) / (hi - lo) *
                                        static_cast<double>(bin_count));
    if (idx >= bin_count) idx = bin_count - 1;  // closed upper edge
    ++spec.counts[idx];
  }
  return spec;
}

}  // namespace cargoflow
