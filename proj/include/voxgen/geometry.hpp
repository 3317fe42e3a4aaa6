#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace voxgen {

using Coord = std::int32_t;

/// A point on the integer voxel lattice. y is the vertical axis.
struct Position {
  Coord x = 0;
  Coord y = 0;
  Coord z = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

struct Delta {
  Coord dx = 0;
  Coord dy = 0;
  Coord dz = 0;

  friend bool operator==(const Delta&, const Delta&) = default;
};

/// Translates p by d. Throws Error(Overflow) instead of wrapping.
Position shifted(Position p, Delta d);

std::string to_string(Position p);

/// Inclusive axis-aligned box; top_left holds the minimum on every axis.
struct Box {
  Position top_left;
  Position bottom_right;

  friend bool operator==(const Box&, const Box&) = default;

  bool well_ordered() const noexcept {
    return top_left.x <= bottom_right.x && top_left.y <= bottom_right.y &&
           top_left.z <= bottom_right.z;
  }
  bool contains(Position p) const noexcept {
    return p.x >= top_left.x && p.x <= bottom_right.x && p.y >= top_left.y &&
           p.y <= bottom_right.y && p.z >= top_left.z && p.z <= bottom_right.z;
  }
  bool contains(const Box& other) const noexcept {
    return contains(other.top_left) && contains(other.bottom_right);
  }

  std::int64_t size_x() const noexcept {
    return std::int64_t{bottom_right.x} - top_left.x + 1;
  }
  std::int64_t size_y() const noexcept {
    return std::int64_t{bottom_right.y} - top_left.y + 1;
  }
  std::int64_t size_z() const noexcept {
    return std::int64_t{bottom_right.z} - top_left.z + 1;
  }
  /// Number of lattice points.
  std::uint64_t volume() const noexcept {
    return static_cast<std::uint64_t>(size_x()) *
           static_cast<std::uint64_t>(size_y()) *
           static_cast<std::uint64_t>(size_z());
  }
};

/// Smallest box containing both.
Box hull(const Box& a, const Box& b) noexcept;
Box shifted(const Box& b, Delta d);
std::string to_string(const Box& b);

/// Per-face insets of a box: low/high side on each axis. All non-negative.
struct Margins {
  Coord x_low = 0;
  Coord x_high = 0;
  Coord y_low = 0;
  Coord y_high = 0;
  Coord z_low = 0;
  Coord z_high = 0;
};

/// The box shrunk by the margins. Throws Error(EmptyBox) when any axis becomes
/// empty and Error(InvalidArgument) on negative margins.
Box inset(const Box& b, const Margins& m);

struct PositionHash {
  std::size_t operator()(const Position& p) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(p.x);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(p.y);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(p.z);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace voxgen
