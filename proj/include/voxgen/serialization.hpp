#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "voxgen/rasterizer.hpp"
#include "voxgen/semantic_map.hpp"

namespace voxgen {

inline constexpr std::string_view kSchemaVersion = "1";

struct BlockRecord {
  std::string material;
  Position position;

  friend bool operator==(const BlockRecord&, const BlockRecord&) = default;
};

struct PlacedEntityRecord {
  std::string type;
  Position position;
  std::map<std::string, std::string> equipment;

  friend bool operator==(const PlacedEntityRecord&, const PlacedEntityRecord&) = default;
};

/// The low-level representation: every block and entity of the world.
struct BlockMapDocument {
  std::vector<BlockRecord> blocks;
  std::vector<PlacedEntityRecord> entities;

  friend bool operator==(const BlockMapDocument&, const BlockMapDocument&) = default;
};

BlockMapDocument build_block_map(const BlockGrid& grid);

/// Sorts blocks and entities by (x, y, z), then material / type.
void canonicalize(BlockMapDocument& doc);
/// Throws Error(Validation) on duplicate block coordinates or empty names.
void validate(const BlockMapDocument& doc);

/// Canonical text of the documents: a pretty top level with one compact
/// record per line, "\n" line endings, fixed key order, sorted lists.
///
/// Semantic map keys: schema_version, id, locations, connections, entities,
/// objects. Block map keys: schema_version, blocks, entities.
std::string to_json(const SemanticMap& map);
std::string to_json(const BlockMapDocument& doc);

/// Parse and validate. Syntax errors throw Error(Parse) with line:column;
/// schema and reference errors throw Error(Validation). `source` names the
/// input in messages.
SemanticMap parse_semantic_map(std::string_view text, std::string_view source = "<input>");
BlockMapDocument parse_block_map(std::string_view text, std::string_view source = "<input>");

/// Writes the semantic map of `world` and the block map of `grid`; grid must
/// be rasterize(world).
void write_world(const WorldModel& world, const BlockGrid& grid,
                 const std::filesystem::path& hlr_path,
                 const std::filesystem::path& llr_path);

SemanticMap read_semantic_map(const std::filesystem::path& path);
BlockMapDocument read_block_map(const std::filesystem::path& path);

/// Whole-file helpers; failures throw Error(Io) naming the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace voxgen
