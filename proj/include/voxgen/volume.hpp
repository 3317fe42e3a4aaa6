#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "voxgen/geometry.hpp"
#include "voxgen/rng.hpp"

namespace voxgen {

/// Material name of volumes that render nothing themselves.
inline constexpr std::string_view kBlank = "blank";

struct BlockPlacement {
  std::string material;
  Position position;

  friend bool operator==(const BlockPlacement&, const BlockPlacement&) = default;
};

/// Equipment slot names accepted on entities.
inline constexpr std::string_view kEquipmentSlots[] = {
    "helmet", "chestplate", "leggings", "boots", "weapon"};

struct EntitySpec {
  std::string id;
  std::string entity_type;
  Position position;
  /// slot -> item; items are opaque strings.
  std::map<std::string, std::string> equipment;

  friend bool operator==(const EntitySpec&, const EntitySpec&) = default;
};

/// A block that carries semantics (a victim, a treasure, ...).
struct ObjectSpec {
  std::string id;
  std::string object_type;
  BlockPlacement block;

  friend bool operator==(const ObjectSpec&, const ObjectSpec&) = default;
};

inline constexpr std::string_view kDoor = "door";
inline constexpr std::string_view kCorridor = "corridor";
inline constexpr std::string_view kOpening = "opening";

/// Semantic link between two or more volumes. Door and opening connections
/// carve air out of the rasterized grid.
struct ConnectionSpec {
  std::string id;
  std::string connection_type;
  Box bounds;
  std::vector<std::string> connected_ids;

  friend bool operator==(const ConnectionSpec&, const ConnectionSpec&) = default;

  bool carves() const noexcept {
    return connection_type == kDoor || connection_type == kOpening;
  }
};

/// A named, typed cuboid that owns child volumes and the items placed in it.
///
/// Two flavours exist. A sized volume has explicit inclusive bounds and a
/// material. A group volume (built with group()) is blank, has no bounds of
/// its own and always reports the hull of its children.
class BoundingVolume {
 public:
  BoundingVolume(std::string id, std::string volume_type, std::string material,
                 Box bounds);

  static BoundingVolume group(std::string id, std::string volume_type = "group");

  const std::string& id() const noexcept { return id_; }
  const std::string& volume_type() const noexcept { return volume_type_; }
  const std::string& material() const noexcept { return material_; }
  bool is_group() const noexcept { return group_; }
  bool is_blank() const noexcept { return material_ == kBlank; }
  bool has_roof() const noexcept { return has_roof_; }

  /// For groups this is the hull of the children, or the zero box when there
  /// are none.
  Box bounds() const;
  /// False for a group without children.
  bool has_extent() const;
  bool contains(Position p) const;

  void set_material(std::string material);
  void set_has_roof(bool roof) noexcept { has_roof_ = roof; }
  /// Throws Error(InvalidArgument) on groups and on ill-ordered boxes.
  void set_bounds(Box bounds);

  const std::vector<BoundingVolume>& children() const noexcept { return children_; }
  std::vector<BoundingVolume>& children() noexcept { return children_; }
  const std::vector<BlockPlacement>& blocks() const noexcept { return blocks_; }
  const std::vector<EntitySpec>& entities() const noexcept { return entities_; }
  const std::vector<ObjectSpec>& objects() const noexcept { return objects_; }
  const std::vector<ConnectionSpec>& connections() const noexcept {
    return connections_;
  }

  /// Appends the child and returns a reference to the stored copy. Throws
  /// DuplicateId if any id of the child's subtree is already used in this
  /// subtree, OutOfBounds if this is a sized volume not containing the child.
  BoundingVolume& add_child(BoundingVolume child);
  void add_block(BlockPlacement block);
  void add_entity(EntitySpec entity);
  void add_object(ObjectSpec object);
  /// Connections are checked for shape here; their ids resolve at
  /// WorldModel::finalize().
  void add_connection(ConnectionSpec connection);

  /// Fills the box inset by the margins with `material`, one block per
  /// lattice point, iterating x, then y, then z.
  void generate_box(std::string_view material, const Margins& margins);
  /// Uniform position inside the inset box. Consumes exactly three draws from
  /// rng, in x, y, z order.
  Position random_pos(SeededRng& rng, const Margins& margins) const;

  /// Translates the volume, its whole subtree, and every block, entity and
  /// object in it. Stored connection bounds are left untouched.
  void shift(Delta d);
  void shift_x(Coord dx) { shift({dx, 0, 0}); }
  void shift_y(Coord dy) { shift({0, dy, 0}); }
  void shift_z(Coord dz) { shift({0, 0, dz}); }

  /// Pre-order visit of this volume and all descendants.
  template <typename F>
  void visit(F&& f) const {
    f(*this);
    for (const auto& child : children_) child.visit(f);
  }

  /// Every id declared in this subtree (volumes, entities, objects,
  /// connections), in pre-order.
  std::vector<std::string> subtree_ids() const;

  friend bool operator==(const BoundingVolume&, const BoundingVolume&) = default;

 private:
  BoundingVolume() = default;
  void require_inside(Position p, std::string_view what) const;
  void require_fresh_id(const std::string& id) const;

  std::string id_;
  std::string volume_type_;
  std::string material_{kBlank};
  Box bounds_{};
  bool group_ = false;
  bool has_roof_ = false;
  std::vector<BoundingVolume> children_;
  std::vector<BlockPlacement> blocks_;
  std::vector<EntitySpec> entities_;
  std::vector<ObjectSpec> objects_;
  std::vector<ConnectionSpec> connections_;
};

/// Copy of v translated by d.
BoundingVolume shift_volume(BoundingVolume v, Delta d);

void validate_entity(const EntitySpec& entity);
void validate_connection(const ConnectionSpec& connection);

}  // namespace voxgen
