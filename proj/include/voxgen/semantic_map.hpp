#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voxgen/geometry.hpp"
#include "voxgen/world.hpp"

namespace voxgen {

struct LocationRecord {
  std::string id;
  std::string type;
  std::string material;
  Box bounds;
  std::vector<std::string> child_ids;

  friend bool operator==(const LocationRecord&, const LocationRecord&) = default;
};

struct ConnectionRecord {
  std::string id;
  std::string type;
  Box bounds;
  std::vector<std::string> connected_ids;

  friend bool operator==(const ConnectionRecord&, const ConnectionRecord&) = default;
};

struct EntityRecord {
  std::string id;
  std::string type;
  Position position;
  /// Absent for world-level entities.
  std::optional<std::string> location_id;
  std::map<std::string, std::string> equipment;

  friend bool operator==(const EntityRecord&, const EntityRecord&) = default;
};

struct ObjectRecord {
  std::string id;
  std::string type;
  std::string material;
  Position position;
  std::optional<std::string> location_id;

  friend bool operator==(const ObjectRecord&, const ObjectRecord&) = default;
};

/// The high-level representation: named locations, their hierarchy and
/// connections, and the entities and objects placed in them. Lists are kept
/// sorted by id (see canonicalize()).
struct SemanticMap {
  std::string id;
  std::vector<LocationRecord> locations;
  std::vector<ConnectionRecord> connections;
  std::vector<EntityRecord> entities;
  std::vector<ObjectRecord> objects;

  friend bool operator==(const SemanticMap&, const SemanticMap&) = default;

  const LocationRecord* find_location(const std::string& id) const;
};

/// One location per volume (all depths), child_ids in insertion order.
SemanticMap build_semantic_map(const WorldModel& world);

/// Sorts every top-level list by id. child_ids and connected_ids keep their
/// order.
void canonicalize(SemanticMap& map);

/// Throws Error(Validation) naming the offending id when ids repeat, a
/// reference does not resolve, bounds are ill-ordered, or child_ids do not
/// form a forest.
void validate(const SemanticMap& map);

}  // namespace voxgen
