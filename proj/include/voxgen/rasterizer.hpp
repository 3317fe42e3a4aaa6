#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voxgen/world.hpp"

namespace voxgen {

/// Flattened world: one material per occupied lattice point, plus entities at
/// absolute positions.
struct BlockGrid {
  std::map<Position, std::string> cells;
  std::vector<EntitySpec> entities;

  friend bool operator==(const BlockGrid&, const BlockGrid&) = default;
};

/// Flattens the world into a BlockGrid.
///
/// Write order (later writes win):
///   for every volume, depth-first pre-order:
///     1. shell: the four vertical perimeter walls at every y layer,
///        skipped for blank volumes;
///     2. roof: the full footprint at the top layer, when has_roof is set
///        (blank volumes emit no roof either);
///     3. explicit blocks, in insertion order;
///     4. object blocks, in insertion order;
///     5. children.
///   then world-level blocks and world-level object blocks.
/// Finally every door/opening connection clears the cells inside its bounds.
/// Entities are collected in the same traversal order, world-level last.
///
/// Throws Error(OutOfBounds) when a block, object or entity lies outside its
/// declaring volume.
///
/// Per-volume write logs are produced in parallel with OpenMP and replayed in
/// the order above, so the result equals rasterize_serial().
BlockGrid rasterize(const WorldModel& world);

/// Single-threaded reference with the same contract.
BlockGrid rasterize_serial(const WorldModel& world);

/// Copy of the grid with every cell and entity translated by d.
BlockGrid translate(const BlockGrid& grid, Delta d);

struct CellDiff {
  Position position;
  std::optional<std::string> in_a;
  std::optional<std::string> in_b;

  friend bool operator==(const CellDiff&, const CellDiff&) = default;
};

/// Every position whose material differs between the grids (including
/// presence), sorted by position. Empty iff the cell maps are identical.
std::vector<CellDiff> diff_grids(const BlockGrid& a, const BlockGrid& b);

/// Number of cells in the wall shell of a box: every layer's perimeter.
std::uint64_t shell_cell_count(const Box& box);

}  // namespace voxgen
