#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cargoflow {

enum class Direction { Import, Export };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view normalized_token);

/// One cleaned containerized movement. All category tokens are trimmed,
/// whitespace-collapsed and uppercased; ffe is strictly positive.
struct ShipmentRecord {
  int year = 0;
  Direction direction = Direction::Import;
  std::string route;
  std::string origin_node;
  std::string destination_node;
  std::string industry;
  std::optional<std::string> commodity;
  double ffe = 0.0;

  bool operator==(const ShipmentRecord&) const = default;
  auto operator<=>(const ShipmentRecord&) const = default;
};

/// Maps maritime service route codes (W1..W5, X6) to service
/// descriptions. Unlisted codes classify to themselves, flagged
/// unclassified.
class RouteTaxonomy {
 public:
  struct Entry {
    std::string description;
    bool classified = false;
  };

  /// The built-in code table shipped with the tool.
  static RouteTaxonomy builtin();

  /// Loads code,description pairs from a two-column CSV.
  static RouteTaxonomy from_csv_file(const std::filesystem::path& path,
                                     char delimiter = ',');

  void add(std::string code, std::string description);
  Entry classify(const std::string& code) const;
  const std::map<std::string, std::string>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::string> entries_;
};

/// Tally of one ingestion run. Rejection reasons are mutually exclusive;
/// accepted + rejected always equals the raw row count. Duplicates are
/// counted but never removed.
struct IngestReport {
  std::uint64_t accepted_count = 0;
  std::uint64_t rejected_missing_field = 0;
  std::uint64_t rejected_invalid_numeric = 0;
  std::uint64_t rejected_nonpositive_ffe = 0;
  std::uint64_t rejected_year_out_of_range = 0;
  std::uint64_t duplicate_count = 0;
  std::uint64_t unknown_route_count = 0;
  double unknown_route_ffe = 0.0;

  std::uint64_t rejected_total() const {
    return rejected_missing_field + rejected_invalid_numeric +
           rejected_nonpositive_ffe + rejected_year_out_of_range;
  }
  std::uint64_t raw_rows() const { return accepted_count + rejected_total(); }

  void merge(const IngestReport& other);
};

}  // namespace cargoflow
