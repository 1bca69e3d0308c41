#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cargoflow/record.hpp"

namespace cargoflow {

enum class Dimension { Route, OriginNode, DestinationNode, Industry, Year,
                       Direction };

std::string_view to_string(Dimension d);
std::optional<Dimension> parse_dimension(std::string_view token);

/// Extracts the category token a record contributes to under the given
/// dimension (years render as decimal strings, directions as
/// IMPORT/EXPORT).
std::string category_of(const ShipmentRecord& record, Dimension dimension);

/// Direction/year predicate applied before aggregation.
struct RecordFilter {
  std::optional<Direction> direction;
  std::optional<int> year;

  bool accepts(const ShipmentRecord& r) const {
    return (!direction || r.direction == *direction) &&
           (!year || r.year == *year);
  }
};

/// FFE masses over one categorical dimension. Immutable after
/// construction; categories with zero mass are never stored, so size()
/// counts observed categories only.
class WeightedDistribution {
 public:
  WeightedDistribution(Dimension dimension,
                       std::map<std::string, double> masses);

  Dimension dimension() const { return dimension_; }
  const std::map<std::string, double>& entries() const { return masses_; }
  double total() const { return total_; }
  std::size_t size() const { return masses_.size(); }

  /// Lexicographically ordered views; shares() sums to 1 within 1e-12.
  std::vector<std::string> categories() const;
  std::vector<double> masses() const;
  std::vector<double> shares() const;

  double share_of(const std::string& category) const;

 private:
  Dimension dimension_;
  std::map<std::string, double> masses_;
  double total_ = 0.0;
};

/// Aggregates record FFE into per-category masses. Within each category
/// the contributions are summed in ascending value order, and categories
/// are totalled in lexicographic order, so the result is bit-identical
/// under any permutation of the input records. Throws DataError when no
/// record passes the filter.
WeightedDistribution build_distribution(std::span<const ShipmentRecord> records,
                                        Dimension dimension,
                                        const RecordFilter& filter = {});

/// Two share vectors over the lexicographically sorted union of
/// supports, zero-filled where a category is absent from one side.
struct Alignment {
  std::vector<std::string> categories;
  std::vector<double> p;
  std::vector<double> q;
};

/// Throws std::invalid_argument on dimension mismatch.
Alignment align(const WeightedDistribution& p, const WeightedDistribution& q);

struct RankedShare {
  std::string category;
  double mass;
  double share;
};

/// First min(k, n) entries by descending share; ties broken by ascending
/// category token.
std::vector<RankedShare> top_k(const WeightedDistribution& dist,
                               std::size_t k);

/// Sorts ascending and sums with the shared reduction kernels; the one
/// canonical mass-accumulation order used across the library.
double stable_mass_sum(std::vector<double> values);

}  // namespace cargoflow
