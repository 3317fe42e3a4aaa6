#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "voxgen/semantic_map.hpp"

namespace voxgen {

/// Read-only lookup structure over a SemanticMap. Immutable after
/// construction; concurrent queries are safe.
class LocationIndex {
 public:
  struct Entry {
    std::string id;
    Box bounds;
    std::uint64_t volume = 0;
    int depth = 0;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;
  };

  /// Validates the map first (Error(Validation) on a bad map).
  explicit LocationIndex(const SemanticMap& map);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const Entry* find(std::string_view id) const;
  /// Unordered pairs (i < j by id) joined by at least one connection.
  const std::vector<std::pair<std::size_t, std::size_t>>& connected_pairs() const noexcept {
    return connected_pairs_;
  }

  /// Index of the most specific location containing p: greatest depth, then
  /// smallest volume, then lexicographically smallest id.
  std::optional<std::size_t> locate_index(Position p) const;

 private:
  std::int64_t bucket_key(std::int64_t bx, std::int64_t bz) const noexcept {
    return bx * 0x100000000ll + bz;
  }

  std::vector<Entry> entries_;
  std::unordered_map<std::string_view, std::size_t> by_id_;
  std::vector<std::pair<std::size_t, std::size_t>> connected_pairs_;
  /// Column buckets over (x, z): each lists the locations overlapping it.
  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets_;
  /// Locations too large to bucket; always scanned.
  std::vector<std::size_t> wide_;
  std::int64_t bucket_edge_ = 16;
  static constexpr std::int64_t kMaxBucketsPerLocation = 1 << 16;
};

/// Id of the most specific location containing p, if any.
std::optional<std::string> locate(const LocationIndex& index, Position p);

/// locate() over many points; OpenMP-parallel over the points.
std::vector<std::optional<std::size_t>> locate_batch(const LocationIndex& index,
                                                     std::span<const Position> points);
/// Single-threaded reference for locate_batch.
std::vector<std::optional<std::size_t>> locate_batch_serial(const LocationIndex& index,
                                                            std::span<const Position> points);

struct TraceEvent {
  std::int64_t timestamp = 0;  // milliseconds, non-negative
  std::string player_id;
  Position position;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct TransitionEvent {
  std::int64_t timestamp = 0;
  std::string player_id;
  std::optional<std::string> from;
  std::optional<std::string> to;

  friend bool operator==(const TransitionEvent&, const TransitionEvent&) = default;
};

/// One event each time a player's located id changes, in trace order. Every
/// player starts in "none", so the first located sample emits from = none.
/// Throws Error(NonMonotonicTrace) if a player's timestamps decrease.
std::vector<TransitionEvent> transitions(const LocationIndex& index,
                                         std::span<const TraceEvent> trace);

/// `connected(a, b)` once per unordered connected pair with a < b, and
/// `contains(parent, child)` per hierarchy edge; sorted, no duplicates.
std::vector<std::string> export_predicates(const LocationIndex& index);

/// Line-delimited JSON, one record per line:
///   {"timestamp":0,"player_id":"p1","x":3,"y":4,"z":3}
/// Blank lines are skipped. Malformed lines throw Error(Parse) with the
/// line number.
std::vector<TraceEvent> parse_trace(std::string_view text, std::string_view source = "<trace>");
std::string format_trace(std::span<const TraceEvent> trace);
/// {"timestamp":..,"player_id":..,"from":id|null,"to":id|null} per line.
std::string format_transitions(std::span<const TransitionEvent> events);
std::vector<TransitionEvent> parse_transitions(std::string_view text,
                                               std::string_view source = "<events>");

}  // namespace voxgen
