#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the rasterizer or the spatial index.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voxgen/semantic_map.hpp"
#include "voxgen/serialization.hpp"

namespace voxgen::testing {

/// Material histogram of the tutorial house computed by enumerating every
/// write in order over raw coordinates: `rooms` log rooms of 6x5x6 voxels
/// anchored at (1 + 5k, 3, 1), each with walls, roof, plank floor and the
/// three glass windows.
std::map<std::string, std::size_t> tutorial_histogram_oracle(int rooms);

/// Histogram of a block map.
std::map<std::string, std::size_t> histogram(const BlockMapDocument& doc);

/// Linear scan over every location: max depth, then min volume, then min id.
std::optional<std::string> locate_oracle(const SemanticMap& map, Position p);

/// Human-readable lockstep violations between the two representations.
std::vector<std::string> lockstep_violations(const SemanticMap& map,
                                             const BlockMapDocument& blocks);

/// True when the rooms named by connections of `type` form one component
/// (breadth-first search over the connection list).
bool connected_over(const SemanticMap& map, const std::string& type,
                    const std::vector<std::string>& nodes);

/// Naive shell enumeration of a box: every lattice point on a side face.
std::vector<Position> shell_oracle(const Box& box);

}  // namespace voxgen::testing
