#include "voxgen/query.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include <json.hpp>

#include "voxgen/error.hpp"

namespace voxgen {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a / b - ((a % b != 0) && ((a < 0) != (b < 0)));
}

}  // namespace

LocationIndex::LocationIndex(const SemanticMap& map) {
  validate(map);
  entries_.reserve(map.locations.size());
  for (const auto& l : map.locations) {
    entries_.push_back({l.id, l.bounds, l.bounds.volume(), 0, std::nullopt, {}});
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) by_id_.emplace(entries_[i].id, i);
  for (std::size_t i = 0; i < map.locations.size(); ++i) {
    for (const auto& child : map.locations[i].child_ids) {
      const auto c = by_id_.at(child);
      entries_[i].children.push_back(c);
      entries_[c].parent = i;
    }
  }
  for (auto& e : entries_) {
    int depth = 0;
    for (auto p = e.parent; p; p = entries_[*p].parent) ++depth;
    e.depth = depth;
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& c : map.connections) {
    for (std::size_t a = 0; a < c.connected_ids.size(); ++a) {
      for (std::size_t b = a + 1; b < c.connected_ids.size(); ++b) {
        auto i = by_id_.at(c.connected_ids[a]);
        auto j = by_id_.at(c.connected_ids[b]);
        if (i == j) continue;
        if (entries_[j].id < entries_[i].id) std::swap(i, j);
        pairs.emplace(i, j);
      }
    }
  }
  connected_pairs_.assign(pairs.begin(), pairs.end());

  // Pick a bucket edge so a typical location spans a handful of buckets.
  if (!entries_.empty()) {
    std::vector<std::int64_t> spans;
    for (const auto& e : entries_)
      spans.push_back(std::max(e.bounds.size_x(), e.bounds.size_z()));
    std::nth_element(spans.begin(), spans.begin() + spans.size() / 2, spans.end());
    bucket_edge_ = std::clamp<std::int64_t>(spans[spans.size() / 2], 4, 1024);
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Box& b = entries_[i].bounds;
    const auto x0 = floor_div(b.top_left.x, bucket_edge_);
    const auto x1 = floor_div(b.bottom_right.x, bucket_edge_);
    const auto z0 = floor_div(b.top_left.z, bucket_edge_);
    const auto z1 = floor_div(b.bottom_right.z, bucket_edge_);
    if ((x1 - x0 + 1) * (z1 - z0 + 1) > kMaxBucketsPerLocation) {
      wide_.push_back(i);
      continue;
    }
    for (auto bx = x0; bx <= x1; ++bx)
      for (auto bz = z0; bz <= z1; ++bz) buckets_[bucket_key(bx, bz)].push_back(i);
  }
}

const LocationIndex::Entry* LocationIndex::find(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &entries_[it->second];
}

std::optional<std::size_t> LocationIndex::locate_index(Position p) const {
  std::optional<std::size_t> best;
  auto consider = [&](std::size_t i) {
    const Entry& e = entries_[i];
    if (!e.bounds.contains(p)) return;
    if (!best) {
      best = i;
      return;
    }
    const Entry& b = entries_[*best];
    if (e.depth != b.depth ? e.depth > b.depth
                           : e.volume != b.volume ? e.volume < b.volume : e.id < b.id) {
      best = i;
    }
  };
  auto it = buckets_.find(
      bucket_key(floor_div(p.x, bucket_edge_), floor_div(p.z, bucket_edge_)));
  if (it != buckets_.end())
    for (const auto i : it->second) consider(i);
  for (const auto i : wide_) consider(i);
  return best;
}

std::optional<std::string> locate(const LocationIndex& index, Position p) {
  if (auto i = index.locate_index(p)) return index.entries()[*i].id;
  return std::nullopt;
}

std::vector<std::optional<std::size_t>> locate_batch_serial(const LocationIndex& index,
                                                            std::span<const Position> points) {
  std::vector<std::optional<std::size_t>> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = index.locate_index(points[i]);
  return out;
}

std::vector<std::optional<std::size_t>> locate_batch(const LocationIndex& index,
                                                     std::span<const Position> points) {
  std::vector<std::optional<std::size_t>> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = index.locate_index(points[i]);
  return out;
}

std::vector<TransitionEvent> transitions(const LocationIndex& index,
                                         std::span<const TraceEvent> trace) {
  struct PlayerState {
    std::int64_t last_timestamp;
    std::optional<std::size_t> where;
  };
  std::unordered_map<std::string, PlayerState> players;
  std::vector<TransitionEvent> events;
  for (const auto& sample : trace) {
    if (sample.timestamp < 0) {
      throw Error(ErrorKind::NonMonotonicTrace,
                  "negative timestamp for player '" + sample.player_id + "'");
    }
    auto [it, fresh] = players.try_emplace(sample.player_id, PlayerState{sample.timestamp, {}});
    PlayerState& state = it->second;
    if (!fresh && sample.timestamp < state.last_timestamp) {
      throw Error(ErrorKind::NonMonotonicTrace,
                  "timestamps of player '" + sample.player_id + "' go backwards at " +
                      std::to_string(sample.timestamp));
    }
    state.last_timestamp = sample.timestamp;
    const auto here = index.locate_index(sample.position);
    if (here == state.where) continue;
    auto name = [&](std::optional<std::size_t> i) -> std::optional<std::string> {
      if (i) return index.entries()[*i].id;
      return std::nullopt;
    };
    events.push_back({sample.timestamp, sample.player_id, name(state.where), name(here)});
    state.where = here;
  }
  return events;
}

std::vector<std::string> export_predicates(const LocationIndex& index) {
  std::set<std::string> facts;
  const auto& entries = index.entries();
  for (const auto& [a, b] : index.connected_pairs())
    facts.insert("connected(" + entries[a].id + ", " + entries[b].id + ")");
  for (const auto& e : entries)
    for (const auto c : e.children) facts.insert("contains(" + e.id + ", " + entries[c].id + ")");
  return {facts.begin(), facts.end()};
}

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    f(line, line_no);
  }
}

[[noreturn]] void bad_line(std::string_view source, std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::Parse, std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

json parse_line(std::string_view line, std::string_view source, std::size_t line_no) {
  json j;
  try {
    j = json::parse(line.begin(), line.end());
  } catch (const json::parse_error& e) {
    bad_line(source, line_no, e.what());
  }
  if (!j.is_object()) bad_line(source, line_no, "expected an object");
  return j;
}

std::int64_t int_field(const json& j, const char* key, std::string_view source,
                       std::size_t line) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer())
    bad_line(source, line, std::string("field '") + key + "' must be an integer");
  return it->get<std::int64_t>();
}

Coord coord_field(const json& j, const char* key, std::string_view source, std::size_t line) {
  const auto v = int_field(j, key, source, line);
  if (v < std::numeric_limits<Coord>::min() || v > std::numeric_limits<Coord>::max())
    bad_line(source, line, std::string("field '") + key + "' out of range");
  return static_cast<Coord>(v);
}

std::string string_field(const json& j, const char* key, std::string_view source,
                         std::size_t line) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string())
    bad_line(source, line, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::optional<std::string> nullable_field(const json& j, const char* key,
                                          std::string_view source, std::size_t line) {
  auto it = j.find(key);
  if (it == j.end()) bad_line(source, line, std::string("missing field '") + key + "'");
  if (it->is_null()) return std::nullopt;
  if (!it->is_string())
    bad_line(source, line, std::string("field '") + key + "' must be a string or null");
  return it->get<std::string>();
}

ordered_json nullable(const std::optional<std::string>& s) {
  return s ? ordered_json(*s) : ordered_json(nullptr);
}

}  // namespace

std::vector<TraceEvent> parse_trace(std::string_view text, std::string_view source) {
  std::vector<TraceEvent> out;
  for_each_line(text, [&](std::string_view line, std::size_t n) {
    const json j = parse_line(line, source, n);
    TraceEvent e;
    e.timestamp = int_field(j, "timestamp", source, n);
    if (e.timestamp < 0) bad_line(source, n, "timestamp must be non-negative");
    e.player_id = string_field(j, "player_id", source, n);
    e.position = {coord_field(j, "x", source, n), coord_field(j, "y", source, n),
                  coord_field(j, "z", source, n)};
    out.push_back(std::move(e));
  });
  return out;
}

std::string format_trace(std::span<const TraceEvent> trace) {
  std::string out;
  for (const auto& e : trace) {
    ordered_json j;
    j["timestamp"] = e.timestamp;
    j["player_id"] = e.player_id;
    j["x"] = e.position.x;
    j["y"] = e.position.y;
    j["z"] = e.position.z;
    out += j.dump() + "\n";
  }
  return out;
}

std::string format_transitions(std::span<const TransitionEvent> events) {
  std::string out;
  for (const auto& e : events) {
    ordered_json j;
    j["timestamp"] = e.timestamp;
    j["player_id"] = e.player_id;
    j["from"] = nullable(e.from);
    j["to"] = nullable(e.to);
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<TransitionEvent> parse_transitions(std::string_view text, std::string_view source) {
  std::vector<TransitionEvent> out;
  for_each_line(text, [&](std::string_view line, std::size_t n) {
    const json j = parse_line(line, source, n);
    out.push_back({int_field(j, "timestamp", source, n), string_field(j, "player_id", source, n),
                   nullable_field(j, "from", source, n), nullable_field(j, "to", source, n)});
  });
  return out;
}

}  // namespace voxgen
