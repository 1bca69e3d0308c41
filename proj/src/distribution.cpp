#include "cargoflow/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cargoflow/error.hpp"
#include "cargoflow/kernels.hpp"

namespace cargoflow {

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::Route: return "route";
    case Dimension::OriginNode: return "origin_node";
    case Dimension::DestinationNode: return "destination_node";
    case Dimension::Industry: return "industry";
    case Dimension::Year: return "year";
    case Dimension::Direction: return "direction";
  }
  return "?";
}

std::optional<Dimension> parse_dimension(std::string_view token) {
  if (token == "route") return Dimension::Route;
  if (token == "origin_node" || token == "origin") return Dimension::OriginNode;
  if (token == "destination_node" || token == "destination")
    return Dimension::DestinationNode;
  if (token == "industry") return Dimension::Industry;
  if (token == "year") return Dimension::Year;
  if (token == "direction") return Dimension::Direction;
  return std::nullopt;
}

std::string category_of(const ShipmentRecord& r, Dimension dimension) {
  switch (dimension) {
    case Dimension::Route: return r.route;
    case Dimension::OriginNode: return r.origin_node;
    case Dimension::DestinationNode: return r.destination_node;
    case Dimension::Industry: return r.industry;
    case Dimension::Year: return std::to_string(r.year);
    case Dimension::Direction: return std::string(to_string(r.direction));
  }
  return {};
}

double stable_mass_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return kernels::sum(values);
}

WeightedDistribution::WeightedDistribution(Dimension dimension,
                                           std::map<std::string, double> masses)
    : dimension_(dimension), masses_(std::move(masses)) {
  for (const auto& [category, mass] : masses_) {
    if (category.empty())
      throw std::invalid_argument("empty category token in distribution");
    if (!(mass > 0.0))
      throw std::invalid_argument("nonpositive mass for category " + category);
  }
  if (masses_.empty())
    throw std::invalid_argument("distribution needs at least one category");
  std::vector<double> mass_values;
  mass_values.reserve(masses_.size());
  for (const auto& [category, mass] : masses_) mass_values.push_back(mass);
  total_ = kernels::sum(mass_values);
}

std::vector<std::string> WeightedDistribution::categories() const {
  std::vector<std::string> out;
  out.reserve(masses_.size());
  for (const auto& [category, mass] : masses_) out.push_back(category);
  return out;
}

std::vector<double> WeightedDistribution::masses() const {
  std::vector<double> out;
  out.reserve(masses_.size());
  for (const auto& [category, mass] : masses_) out.push_back(mass);
  return out;
}

std::vector<double> WeightedDistribution::shares() const {
  std::vector<double> out;
  out.reserve(masses_.size());
  for (const auto& [category, mass] : masses_) out.push_back(mass / total_);
  return out;
}

double WeightedDistribution::share_of(const std::string& category) const {
  auto it = masses_.find(category);
  return it == masses_.end() ? 0.0 : it->second / total_;
}

WeightedDistribution build_distribution(std::span<const ShipmentRecord> records,
                                        Dimension dimension,
                                        const RecordFilter& filter) {
  std::map<std::string, std::vector<double>> buckets;
  for (const ShipmentRecord& r : records) {
    if (!filter.accepts(r)) continue;
    buckets[category_of(r, dimension)].push_back(r.ffe);
  }
  if (buckets.empty()) {
    throw DataError("no records pass the filter for dimension " +
                    std::string(to_string(dimension)));
  }
  std::map<std::string, double> masses;
  for (auto& [category, values] : buckets) {
    masses.emplace(category, stable_mass_sum(std::move(values)));
  }
  return WeightedDistribution(dimension, std::move(masses));
}

Alignment align(const WeightedDistribution& p, const WeightedDistribution& q) {
  if (p.dimension() != q.dimension()) {
    throw std::invalid_argument("align: dimension mismatch");
  }
  Alignment out;
  auto pi = p.entries().begin();
  auto qi = q.entries().begin();
  while (pi != p.entries().end() || qi != q.entries().end()) {
    bool take_p = false;
    bool take_q = false;
    if (pi == p.entries().end()) {
      take_q = true;
    } else if (qi == q.entries().end()) {
      take_p = true;
    } else if (pi->first < qi->first) {
      take_p = true;
    } else if (qi->first < pi->first) {
      take_q = true;
    } else {
      take_p = take_q = true;
    }
    out.categories.push_back(take_p ? pi->first : qi->first);
    out.p.push_back(take_p ? pi->second / p.total() : 0.0);
    out.q.push_back(take_q ? qi->second / q.total() : 0.0);
    if (take_p) ++pi;
    if (take_q) ++qi;
  }
  return out;
}

std::vector<RankedShare> top_k(const WeightedDistribution& dist,
                               std::size_t k) {
  std::vector<RankedShare> all;
  all.reserve(dist.size());
  for (const auto& [category, mass] : dist.entries()) {
    all.push_back({category, mass, mass / dist.total()});
  }
  std::sort(all.begin(), all.end(), [](const RankedShare& a,
                                       const RankedShare& b) {
    if (a.mass != b.mass) return a.mass > b.mass;
    return a.category < b.category;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

}  // namespace cargoflow
