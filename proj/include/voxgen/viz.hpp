#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "voxgen/semantic_map.hpp"
#include "voxgen/serialization.hpp"

namespace voxgen {

struct BlueprintStyle {
  int voxel_pixel_scale = 8;
  /// material -> "#rrggbb"
  std::map<std::string, std::string> palette;
  std::string fallback_color = "#ff00ff";
  bool labels = true;

  /// Scale 8, labels on, colours for every material the built-in generators
  /// use.
  static BlueprintStyle defaults();

  const std::string& color_of(const std::string& material) const;
  /// Throws Error(InvalidArgument) on a non-positive scale or a malformed
  /// colour.
  void validate() const;
};

/// Merges a palette file into `style`:
///   {"default": "#rrggbb", "materials": {"log": "#8b5a2b", ...}}
/// Both keys are optional.
void load_palette(const std::filesystem::path& path, BlueprintStyle& style);

/// Top-down SVG: x to the right, z downwards, one outlined rectangle per leaf
/// location at exactly bounds * scale (viewBox coordinates). With a block map
/// every (x, z) column is filled with the colour of its topmost block.
std::string render_blueprint(const SemanticMap& map,
                             const std::optional<BlockMapDocument>& blocks,
                             const BlueprintStyle& style);

enum class GraphMode { Hierarchy, Topology };

std::optional<GraphMode> parse_graph_mode(std::string_view text);

/// DOT text. Nodes sorted by id. Hierarchy: a digraph with parent -> child
/// edges. Topology: an undirected graph with one edge per connected pair.
std::string render_graph(const SemanticMap& map, GraphMode mode);

}  // namespace voxgen
