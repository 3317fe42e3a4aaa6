#include "voxgen/serialization.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "voxgen/error.hpp"

namespace voxgen {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

namespace {

// ------------------------------------------------------------------ writing

ordered_json triple(Position p) { return ordered_json::array({p.x, p.y, p.z}); }

ordered_json bounds_json(const Box& b) {
  ordered_json out = ordered_json::object();
  out["top_left"] = triple(b.top_left);
  out["bottom_right"] = triple(b.bottom_right);
  return out;
}

ordered_json equipment_json(const std::map<std::string, std::string>& equipment) {
  ordered_json out = ordered_json::object();
  for (const auto& [slot, item] : equipment) out[slot] = item;
  return out;
}

ordered_json optional_string(const std::optional<std::string>& s) {
  return s ? ordered_json(*s) : ordered_json(nullptr);
}

std::string compact(const ordered_json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::strict);
}

/// Emits `"key": [` + one record per line + `]`.
void write_list(std::ostringstream& out, std::string_view key,
                const std::vector<ordered_json>& records, bool last) {
  out << "  \"" << key << "\": [";
  if (records.empty()) {
    out << "]";
  } else {
    out << "\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      out << "    " << compact(records[i]) << (i + 1 < records.size() ? ",\n" : "\n");
    }
    out << "  ]";
  }
  out << (last ? "\n" : ",\n");
}

// ------------------------------------------------------------------ reading

[[noreturn]] void invalid(std::string_view source, const std::string& msg) {
  throw Error(ErrorKind::Validation, std::string(source) + ": " + msg);
}

json parse_text(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Convert the byte offset into line:column.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::Parse, std::string(source) + ":" + std::to_string(line) + ":" +
                                      std::to_string(column) + ": " + e.what());
  }
}

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  const json& field(const json& obj, const char* key, const std::string& where) const {
    if (!obj.is_object()) invalid(source_, where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) invalid(source_, where + ": missing field '" + key + "'");
    return *it;
  }

  std::string string(const json& obj, const char* key, const std::string& where) const {
    const json& v = field(obj, key, where);
    if (!v.is_string()) invalid(source_, where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
  }

  std::optional<std::string> nullable_string(const json& obj, const char* key,
                                             const std::string& where) const {
    const json& v = field(obj, key, where);
    if (v.is_null()) return std::nullopt;
    if (!v.is_string())
      invalid(source_, where + ": field '" + key + "' must be a string or null");
    return v.get<std::string>();
  }

  Coord coord(const json& v, const std::string& where) const {
    if (!v.is_number_integer()) invalid(source_, where + ": coordinate must be an integer");
    const auto value = v.get<std::int64_t>();
    if (value < std::numeric_limits<Coord>::min() || value > std::numeric_limits<Coord>::max())
      invalid(source_, where + ": coordinate out of range");
    return static_cast<Coord>(value);
  }

  Position position(const json& obj, const char* key, const std::string& where) const {
    const json& v = field(obj, key, where);
    if (!v.is_array() || v.size() != 3)
      invalid(source_, where + ": field '" + key + "' must be [x, y, z]");
    return {coord(v[0], where), coord(v[1], where), coord(v[2], where)};
  }

  Position flat_position(const json& obj, const std::string& where) const {
    return {coord(field(obj, "x", where), where), coord(field(obj, "y", where), where),
            coord(field(obj, "z", where), where)};
  }

  Box bounds(const json& obj, const std::string& where) const {
    const json& b = field(obj, "bounds", where);
    return {position(b, "top_left", where + ".bounds"),
            position(b, "bottom_right", where + ".bounds")};
  }

  std::vector<std::string> strings(const json& obj, const char* key,
                                   const std::string& where) const {
    const json& v = field(obj, key, where);
    if (!v.is_array()) invalid(source_, where + ": field '" + key + "' must be a list");
    std::vector<std::string> out;
    for (const auto& item : v) {
      if (!item.is_string())
        invalid(source_, where + ": field '" + key + "' must hold strings");
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  std::map<std::string, std::string> equipment(const json& obj, bool required,
                                               const std::string& where) const {
    std::map<std::string, std::string> out;
    auto it = obj.find("equipment");
    if (it == obj.end()) {
      if (required) invalid(source_, where + ": missing field 'equipment'");
      return out;
    }
    if (!it->is_object()) invalid(source_, where + ": equipment must be an object");
    for (const auto& [slot, item] : it->items()) {
      if (!item.is_string()) invalid(source_, where + ": equipment items must be strings");
      out.emplace(slot, item.get<std::string>());
    }
    return out;
  }

  const json& list(const json& root, const char* key) const {
    const json& v = field(root, key, "document");
    if (!v.is_array()) invalid(source_, std::string("'") + key + "' must be a list");
    return v;
  }

  void check_version(const json& root) const {
    const auto version = string(root, "schema_version", "document");
    if (version != kSchemaVersion)
      invalid(source_, "unsupported schema_version '" + version + "'");
  }

 private:
  std::string_view source_;
};

std::string where(const char* list, std::size_t index) {
  return std::string(list) + "[" + std::to_string(index) + "]";
}

bool entity_less(const PlacedEntityRecord& a, const PlacedEntityRecord& b) {
  return std::tie(a.position, a.type, a.equipment) < std::tie(b.position, b.type, b.equipment);
}

}  // namespace

BlockMapDocument build_block_map(const BlockGrid& grid) {
  BlockMapDocument doc;
  doc.blocks.reserve(grid.cells.size());
  for (const auto& [p, m] : grid.cells) doc.blocks.push_back({m, p});
  for (const auto& e : grid.entities)
    doc.entities.push_back({e.entity_type, e.position, e.equipment});
  canonicalize(doc);
  return doc;
}

void canonicalize(BlockMapDocument& doc) {
  std::sort(doc.blocks.begin(), doc.blocks.end(), [](const auto& a, const auto& b) {
    return std::tie(a.position, a.material) < std::tie(b.position, b.material);
  });
  std::sort(doc.entities.begin(), doc.entities.end(), entity_less);
}

void validate(const BlockMapDocument& doc) {
  std::set<Position> seen;
  for (const auto& b : doc.blocks) {
    if (b.material.empty())
      throw Error(ErrorKind::Validation, "block at " + to_string(b.position) + " has no material");
    if (!seen.insert(b.position).second)
      throw Error(ErrorKind::Validation, "duplicate block at " + to_string(b.position));
  }
  for (const auto& e : doc.entities)
    if (e.type.empty())
      throw Error(ErrorKind::Validation, "entity at " + to_string(e.position) + " has no type");
}

std::string to_json(const SemanticMap& input) {
  SemanticMap map = input;
  canonicalize(map);
  std::vector<ordered_json> locations, connections, entities, objects;
  for (const auto& l : map.locations) {
    ordered_json j;
    j["id"] = l.id;
    j["type"] = l.type;
    j["material"] = l.material;
    j["bounds"] = bounds_json(l.bounds);
    j["child_ids"] = l.child_ids;
    locations.push_back(std::move(j));
  }
  for (const auto& c : map.connections) {
    ordered_json j;
    j["id"] = c.id;
    j["type"] = c.type;
    j["bounds"] = bounds_json(c.bounds);
    j["connected_ids"] = c.connected_ids;
    connections.push_back(std::move(j));
  }
  for (const auto& e : map.entities) {
    ordered_json j;
    j["id"] = e.id;
    j["type"] = e.type;
    j["position"] = triple(e.position);
    j["location_id"] = optional_string(e.location_id);
    j["equipment"] = equipment_json(e.equipment);
    entities.push_back(std::move(j));
  }
  for (const auto& o : map.objects) {
    ordered_json j;
    j["id"] = o.id;
    j["type"] = o.type;
    j["material"] = o.material;
    j["position"] = triple(o.position);
    j["location_id"] = optional_string(o.location_id);
    objects.push_back(std::move(j));
  }
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << compact(ordered_json(kSchemaVersion)) << ",\n";
  out << "  \"id\": " << compact(ordered_json(map.id)) << ",\n";
  write_list(out, "locations", locations, false);
  write_list(out, "connections", connections, false);
  write_list(out, "entities", entities, false);
  write_list(out, "objects", objects, true);
  out << "}\n";
  return out.str();
}

std::string to_json(const BlockMapDocument& input) {
  BlockMapDocument doc = input;
  canonicalize(doc);
  std::vector<ordered_json> blocks, entities;
  blocks.reserve(doc.blocks.size());
  for (const auto& b : doc.blocks) {
    ordered_json j;
    j["material"] = b.material;
    j["x"] = b.position.x;
    j["y"] = b.position.y;
    j["z"] = b.position.z;
    blocks.push_back(std::move(j));
  }
  for (const auto& e : doc.entities) {
    ordered_json j;
    j["type"] = e.type;
    j["x"] = e.position.x;
    j["y"] = e.position.y;
    j["z"] = e.position.z;
    if (!e.equipment.empty()) j["equipment"] = equipment_json(e.equipment);
    entities.push_back(std::move(j));
  }
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << compact(ordered_json(kSchemaVersion)) << ",\n";
  write_list(out, "blocks", blocks, false);
  write_list(out, "entities", entities, true);
  out << "}\n";
  return out.str();
}

SemanticMap parse_semantic_map(std::string_view text, std::string_view source) {
  const json root = parse_text(text, source);
  const Reader r(source);
  r.check_version(root);
  SemanticMap map;
  map.id = r.string(root, "id", "document");

  const auto& locations = r.list(root, "locations");
  for (std::size_t i = 0; i < locations.size(); ++i) {
    const auto w = where("locations", i);
    const json& j = locations[i];
    map.locations.push_back({r.string(j, "id", w), r.string(j, "type", w),
                             r.string(j, "material", w), r.bounds(j, w),
                             r.strings(j, "child_ids", w)});
  }
  const auto& connections = r.list(root, "connections");
  for (std::size_t i = 0; i < connections.size(); ++i) {
    const auto w = where("connections", i);
    const json& j = connections[i];
    map.connections.push_back({r.string(j, "id", w), r.string(j, "type", w), r.bounds(j, w),
                               r.strings(j, "connected_ids", w)});
  }
  const auto& entities = r.list(root, "entities");
  for (std::size_t i = 0; i < entities.size(); ++i) {
    const auto w = where("entities", i);
    const json& j = entities[i];
    map.entities.push_back({r.string(j, "id", w), r.string(j, "type", w),
                            r.position(j, "position", w),
                            r.nullable_string(j, "location_id", w), r.equipment(j, true, w)});
  }
  const auto& objects = r.list(root, "objects");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto w = where("objects", i);
    const json& j = objects[i];
    map.objects.push_back({r.string(j, "id", w), r.string(j, "type", w),
                           r.string(j, "material", w), r.position(j, "position", w),
                           r.nullable_string(j, "location_id", w)});
  }
  try {
    validate(map);
  } catch (const Error& e) {
    invalid(source, e.what());
  }
  return map;
}

BlockMapDocument parse_block_map(std::string_view text, std::string_view source) {
  const json root = parse_text(text, source);
  const Reader r(source);
  r.check_version(root);
  BlockMapDocument doc;
  const auto& blocks = r.list(root, "blocks");
  doc.blocks.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto w = where("blocks", i);
    doc.blocks.push_back({r.string(blocks[i], "material", w), r.flat_position(blocks[i], w)});
  }
  const auto& entities = r.list(root, "entities");
  for (std::size_t i = 0; i < entities.size(); ++i) {
    const auto w = where("entities", i);
    const json& j = entities[i];
    doc.entities.push_back({r.string(j, "type", w), r.flat_position(j, w),
                            r.equipment(j, false, w)});
  }
  try {
    validate(doc);
  } catch (const Error& e) {
    invalid(source, e.what());
  }
  return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io,
                "cannot open '" + path.string() + "' for reading: " + std::strerror(errno));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "error reading '" + path.string() + "'");
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::Io,
                "cannot open '" + path.string() + "' for writing: " + std::strerror(errno));
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error(ErrorKind::Io, "error writing '" + path.string() + "'");
}

void write_world(const WorldModel& world, const BlockGrid& grid,
                 const std::filesystem::path& hlr_path,
                 const std::filesystem::path& llr_path) {
  const auto hlr = to_json(build_semantic_map(world));
  const auto llr = to_json(build_block_map(grid));
  write_text_file(hlr_path, hlr);
  write_text_file(llr_path, llr);
}

SemanticMap read_semantic_map(const std::filesystem::path& path) {
  return parse_semantic_map(read_text_file(path), path.string());
}

BlockMapDocument read_block_map(const std::filesystem::path& path) {
  return parse_block_map(read_text_file(path), path.string());
}

}  // namespace voxgen
