#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cargoflow/record.hpp"

namespace cargoflow {

/// Marginal share targets for one (year, direction) cell. Share maps sum
/// to 1 within 1e-9; zero-share categories are allowed and simply never
/// materialize.
struct GroupTarget {
  int year = 0;
  Direction direction = Direction::Import;
  std::map<std::string, double> route_shares;
  std::map<std::string, double> origin_shares;
  std::map<std::string, double> destination_shares;
  std::map<std::string, double> industry_shares;
  double total_ffe = 0.0;
  std::size_t record_count = 0;
};

struct SizeModel {
  double mu = 0.0;     // log-space location; 0 puts the median at 1 FFE
  double sigma = 1.27; // log-space spread; heavy upper tail
};

struct SynthTarget {
  std::vector<GroupTarget> groups;
  std::uint64_t seed = 0;
  SizeModel size_model;

  static SynthTarget from_json_file(const std::filesystem::path& path);
  static SynthTarget from_json_text(const std::string& text);

  /// Throws SchemaError / DataError on malformed or infeasible targets.
  void validate() const;
};

/// Deterministic generator whose per-dimension aggregated masses equal
/// the targets to floating-point accuracy. Each group's total mass is
/// laid out as an interval; every dimension partitions that interval by
/// cumulative share, and one record is emitted per segment of the
/// overlaid partition. The largest segments are then halved until
/// record_count is reached. Throws DataError when record_count is below
/// the segment count.
std::vector<ShipmentRecord> generate_exact(const SynthTarget& target);

/// Seeded sampling generator: categories drawn from the share maps,
/// sizes from a log-normal (then rescaled so each group hits its total),
/// reproducing the skewed shipment-size profile. One splitmix64 stream
/// advances across groups in their listed order; a record consumes four
/// category draws then one size draw.
std::vector<ShipmentRecord> generate_sampled(const SynthTarget& target);

/// Canonical-layout CSV, consumable by ingestion; byte-deterministic.
void write_canonical_csv(std::ostream& out,
                         std::span<const ShipmentRecord> records,
                         char delimiter = ',');
void write_canonical_csv_file(const std::filesystem::path& path,
                              std::span<const ShipmentRecord> records,
                              char delimiter = ',');

}  // namespace cargoflow
