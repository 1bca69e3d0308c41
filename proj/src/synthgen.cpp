#include "cargoflow/synthgen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iterator>
#include <ostream>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "cargoflow/csv.hpp"
#include "cargoflow/error.hpp"
#include "cargoflow/format.hpp"
#include "cargoflow/ingest.hpp"
#include "cargoflow/rng.hpp"

namespace cargoflow {
namespace {

using nlohmann::json;

struct DimensionPartition {
  std::vector<std::string> categories;  // lexicographic
  std::vector<double> boundaries;       // size n + 1; [0] = 0, [n] = total
};

DimensionPartition make_partition(const std::map<std::string, double>& shares,
                                  double total) {
  DimensionPartition part;
  part.boundaries.push_back(0.0);
  double share_sum = 0.0;
  for (const auto& kv : shares) share_sum += kv.second;
  double cum = 0.0;
  for (const auto& [category, share] : shares) {
    part.categories.push_back(category);
    cum += share;
    part.boundaries.push_back(total * (cum / share_sum));
  }
  part.boundaries.back() = total;  // pin the final edge exactly
  return part;
}

std::size_t category_at(const DimensionPartition& part, double position) {
  const auto it = std::upper_bound(part.boundaries.begin() + 1,
                                   part.boundaries.end(), position);
  const auto idx = static_cast<std::size_t>(
      std::distance(part.boundaries.begin() + 1, it));
  return std::min(idx, part.categories.size() - 1);
}

std::map<std::string, double> parse_share_map(const json& j,
                                              const std::string& field) {
  if (!j.contains(field) || !j[field].is_object()) {
    throw SchemaError("synth target group needs an object field '" + field +
                      "'");
  }
  std::map<std::string, double> out;
  for (const auto& [key, value] : j[field].items()) {
    const auto token = normalize_text(key);
    if (!token)
      throw SchemaError("synth target: null-like category in " + field);
    if (!value.is_number())
      throw SchemaError("synth target: non-numeric share in " + field);
    out[*token] = value.get<double>();
  }
  return out;
}

void check_share_map(const std::map<std::string, double>& shares,
                     const std::string& field) {
  if (shares.empty())
    throw SchemaError("synth target: empty share map " + field);
  double total = 0.0;
  for (const auto& [category, share] : shares) {
    if (share < 0.0)
      throw SchemaError("synth target: negative share for " + category);
    total += share;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw SchemaError("synth target: shares in " + field +
                      " must sum to 1");
}

std::size_t live_categories(const std::map<std::string, double>& shares) {
  std::size_t n = 0;
  for (const auto& kv : shares) {
    if (kv.second > 0.0) ++n;
  }
  return n;
}

struct Piece {
  double mass;
  std::size_t segment;
  std::uint64_t id;
};

std::vector<ShipmentRecord> exact_group(const GroupTarget& g) {
  const std::array<const std::map<std::string, double>*, 4> share_maps = {
      &g.route_shares, &g.origin_shares, &g.destination_shares,
      &g.industry_shares};

  std::array<DimensionPartition, 4> parts;
  std::vector<double> cuts = {0.0, g.total_ffe};
  for (std::size_t d = 0; d < 4; ++d) {
    parts[d] = make_partition(*share_maps[d], g.total_ffe);
    cuts.insert(cuts.end(), parts[d].boundaries.begin() + 1,
                parts[d].boundaries.end() - 1);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  struct Segment {
    double mass;
    std::array<std::size_t, 4> category;
  };
  std::vector<Segment> segments;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mass = cuts[i + 1] - cuts[i];
    if (!(mass > 0.0)) continue;
    const double mid = cuts[i] + mass / 2.0;
    Segment seg;
    seg.mass = mass;
    for (std::size_t d = 0; d < 4; ++d) {
      seg.category[d] = category_at(parts[d], mid);
    }
    segments.push_back(seg);
  }

  if (g.record_count < segments.size()) {
    throw DataError("synth target infeasible: record_count " +
                    std::to_string(g.record_count) + " below the " +
                    std::to_string(segments.size()) +
                    " segments the share maps require");
  }

  // halve the largest piece until the requested count is reached
  auto heavier = [](const Piece& a, const Piece& b) {
    if (a.mass != b.mass) return a.mass < b.mass;
    return a.id > b.id;
  };
  std::priority_queue<Piece, std::vector<Piece>, decltype(heavier)> heap(
      heavier);
  std::uint64_t next_id = 0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    heap.push({segments[s].mass, s, next_id++});
  }
  for (std::size_t extra = g.record_count - segments.size(); extra > 0;
       --extra) {
    const Piece top = heap.top();
    heap.pop();
    const double half = top.mass / 2.0;
    if (!(half > 0.0))
      throw DataError("synth target infeasible: record mass underflow");
    heap.push({half, top.segment, next_id++});
    heap.push({half, top.segment, next_id++});
  }

  std::vector<Piece> pieces;
  pieces.reserve(g.record_count);
  while (!heap.empty()) {
    pieces.push_back(heap.top());
    heap.pop();
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.segment != b.segment) return a.segment < b.segment;
    return a.id < b.id;
  });

  std::vector<ShipmentRecord> out;
  out.reserve(pieces.size());
  for (const Piece& piece : pieces) {
    const Segment& seg = segments[piece.segment];
    ShipmentRecord r;
    r.year = g.year;
    r.direction = g.direction;
    r.route = parts[0].categories[seg.category[0]];
    r.origin_node = parts[1].categories[seg.category[1]];
    r.destination_node = parts[2].categories[seg.category[2]];
    r.industry = parts[3].categories[seg.category[3]];
    r.ffe = piece.mass;
    out.push_back(std::move(r));
  }
  return out;
}

struct CumulativeShares {
  std::vector<std::string> categories;
  std::vector<double> cum;
};

CumulativeShares cumulative(const std::map<std::string, double>& shares) {
  CumulativeShares out;
  double total = 0.0;
  for (const auto& kv : shares) total += kv.second;
  double cum = 0.0;
  for (const auto& [category, share] : shares) {
    out.categories.push_back(category);
    cum += share;
    out.cum.push_back(cum / total);
  }
  out.cum.back() = 1.0;
  return out;
}

const std::string& draw(const CumulativeShares& c, SplitMix64& rng) {
  const double u = rng.next_unit();
  const auto it = std::upper_bound(c.cum.begin(), c.cum.end(), u);
  const auto idx = static_cast<std::size_t>(std::distance(c.cum.begin(), it));
  return c.categories[std::min(idx, c.categories.size() - 1)];
}

}  // namespace

SynthTarget SynthTarget::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open synth target: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

SynthTarget SynthTarget::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("synth target is not valid JSON: ") +
                      e.what());
  }

  SynthTarget target;
  target.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("size_model")) {
    target.size_model.mu = j["size_model"].value("mu", 0.0);
    target.size_model.sigma = j["size_model"].value("sigma", 1.27);
  }
  if (!j.contains("groups") || !j["groups"].is_array() ||
      j["groups"].empty()) {
    throw SchemaError("synth target needs a non-empty 'groups' array");
  }
  for (const json& jg : j["groups"]) {
    GroupTarget g;
    if (!jg.contains("year") || !jg["year"].is_number_integer())
      throw SchemaError("synth target group needs integer 'year'");
    g.year = jg["year"].get<int>();
    const auto dir_tok =
        normalize_text(jg.value("direction", std::string{}));
    const auto dir = dir_tok ? parse_direction(*dir_tok) : std::nullopt;
    if (!dir)
      throw SchemaError("synth target group needs direction IMPORT|EXPORT");
    g.direction = *dir;
    g.total_ffe = jg.value("total_ffe", 0.0);
    g.record_count = jg.value("record_count", std::size_t{0});
    g.route_shares = parse_share_map(jg, "route_shares");
    g.origin_shares = parse_share_map(jg, "origin_shares");
    g.destination_shares = parse_share_map(jg, "destination_shares");
    g.industry_shares = parse_share_map(jg, "industry_shares");
    target.groups.push_back(std::move(g));
  }
  target.validate();
  return target;
}

void SynthTarget::validate() const {
  if (groups.empty()) throw SchemaError("synth target has no groups");
  if (!(size_model.sigma > 0.0))
    throw SchemaError("synth target: size_model.sigma must be positive");
  for (const GroupTarget& g : groups) {
    check_share_map(g.route_shares, "route_shares");
    check_share_map(g.origin_shares, "origin_shares");
    check_share_map(g.destination_shares, "destination_shares");
    check_share_map(g.industry_shares, "industry_shares");
    if (!(g.total_ffe > 0.0))
      throw SchemaError("synth target: total_ffe must be positive");
    const std::size_t largest = std::max(
        {live_categories(g.route_shares), live_categories(g.origin_shares),
         live_categories(g.destination_shares),
         live_categories(g.industry_shares)});
    if (g.record_count < std::max<std::size_t>(largest, 1)) {
      throw DataError(
          "synth target infeasible: record_count below the category count "
          "of the largest share map");
    }
  }
}

std::vector<ShipmentRecord> generate_exact(const SynthTarget& target) {
  target.validate();
  std::vector<ShipmentRecord> out;
  for (const GroupTarget& g : target.groups) {
    auto group_records = exact_group(g);
    out.insert(out.end(), std::make_move_iterator(group_records.begin()),
               std::make_move_iterator(group_records.end()));
  }
  return out;
}

std::vector<ShipmentRecord> generate_sampled(const SynthTarget& target) {
  target.validate();
  SplitMix64 rng(target.seed);
  std::vector<ShipmentRecord> out;
  for (const GroupTarget& g : target.groups) {
    const CumulativeShares routes = cumulative(g.route_shares);
    const CumulativeShares origins = cumulative(g.origin_shares);
    const CumulativeShares destinations = cumulative(g.destination_shares);
    const CumulativeShares industries = cumulative(g.industry_shares);

    std::vector<ShipmentRecord> group;
    group.reserve(g.record_count);
    double size_sum = 0.0;
    for (std::size_t i = 0; i < g.record_count; ++i) {
      ShipmentRecord r;
      r.year = g.year;
      r.direction = g.direction;
      r.route = draw(routes, rng);
      r.origin_node = draw(origins, rng);
      r.destination_node = draw(destinations, rng);
      r.industry = draw(industries, rng);
      r.ffe = std::exp(target.size_model.mu +
                       target.size_model.sigma * rng.next_normal());
      size_sum += r.ffe;
      group.push_back(std::move(r));
    }
    const double scale = g.total_ffe / size_sum;
    for (ShipmentRecord& r : group) r.ffe *= scale;
    out.insert(out.end(), std::make_move_iterator(group.begin()),
               std::make_move_iterator(group.end()));
  }
  return out;
}

void write_canonical_csv(std::ostream& out,
                         std::span<const ShipmentRecord> records,
                         char delimiter) {
  csv::write_row(out,
                 {"Year", "Direction", "Route", "Origin_Node",
                  "Destination_Node", "Industry", "Commodity", "FFE"},
                 delimiter);
  for (const ShipmentRecord& r : records) {
    csv::write_row(out,
                   {std::to_string(r.year), std::string(to_string(r.direction)),
                    r.route, r.origin_node, r.destination_node, r.industry,
                    r.commodity.value_or(""), format_double(r.ffe)},
                   delimiter);
  }
}

void write_canonical_csv_file(const std::filesystem::path& path,
                              std::span<const ShipmentRecord> records,
                              char delimiter) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write: " + path.string());
  write_canonical_csv(out, records, delimiter);
}

}  // namespace cargoflow
