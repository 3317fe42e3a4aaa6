#pragma once

#include <cstdint>

#include "voxgen/rng.hpp"
#include "voxgen/world.hpp"

namespace voxgen {

/// Ground level shared by all built-in generators.
inline constexpr Coord kGroundY = 3;

struct IntRange {
  int low = 0;
  int high = 0;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct DungeonParams {
  int n = 4;
  std::uint64_t seed = 0;
  Coord cell_footprint = 10;
  Probability room_probability{1, 2};
  IntRange treasure_range{1, 3};
  IntRange monster_range{1, 2};
  IntRange lava_patch_range{1, 3};
  IntRange spiderweb_range{0, 4};
  /// Whole-grid re-rolls allowed before giving up on reaching two rooms.
  int max_attempts = 64;

  /// Throws Error(InvalidArgument) describing the first bad field.
  void validate() const;
};

/// n x n grid of identical rooms "room_<row>_<col>" sharing walls, with a
/// door between every pair of neighbours. Rooms are 7x7 voxels, 4 layers
/// high, on a stride of 6. Fully deterministic.
WorldModel gen_gridworld(int n);

/// Seeded dungeon on an n x n cell grid.
///
/// RNG draw order:
///   1. occupancy: one bernoulli(room_probability) per cell in row-major
///      order; the whole grid is re-rolled until at least two cells are
///      occupied (max_attempts rolls, then Error(RetryExhausted));
///   2. per occupied cell, row-major: room kind (uniform 0/1: stone brick or
///      nether brick), treasure count, monster count, then a partial shuffle
///      of the room's free interior cells (treasures take the first slots,
///      monsters the following ones), then spiderweb count and wall shuffle
///      (stone) or lava patch count and one (x, z) pair per patch (nether).
/// Corridors consume no randomness: occupied cells are visited row-major and
/// each joins the nearest already-connected cell (Manhattan distance on the
/// grid, earliest cell on ties) through an L-shaped corridor that runs along
/// the new room's row, then along the target's column.
WorldModel gen_dungeon(const DungeonParams& params);

/// Boundary wall around a 3x3 grid of plots. The four corner plots hold a
/// two-room building with a zombie and a villager; the other five plots each
/// draw lava, water or nothing with equal probability. Two internal walls
/// partition the yard. Draws happen plot by plot in row-major order: three
/// for the zombie, three for the villager, one per pit.
WorldModel gen_zombieworld(std::uint64_t seed);

/// Two-room log house with plank floors, glass windows, roofs and one zombie
/// per room.
WorldModel gen_tutorial_house();

/// A single tutorial room anchored at top_left, before it joins any world.
BoundingVolume make_tutorial_room(const std::string& id, Position top_left);

}  // namespace voxgen
