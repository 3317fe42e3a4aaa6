#include "voxgen/volume.hpp"

#include <algorithm>
#include <unordered_set>

#include "voxgen/error.hpp"

namespace voxgen {

namespace {

bool known_slot(const std::string& slot) {
  return std::find(std::begin(kEquipmentSlots), std::end(kEquipmentSlots), slot) !=
         std::end(kEquipmentSlots);
}

}  // namespace

void validate_entity(const EntitySpec& entity) {
  if (entity.id.empty()) {
    throw Error(ErrorKind::InvalidArgument, "entity id must be nonempty");
  }
  if (entity.entity_type.empty()) {
    throw Error(ErrorKind::InvalidArgument, "entity '" + entity.id + "' has no type");
  }
  for (const auto& [slot, item] : entity.equipment) {
    if (!known_slot(slot)) {
      throw Error(ErrorKind::InvalidArgument,
                  "entity '" + entity.id + "': unknown equipment slot '" + slot + "'");
    }
  }
}

void validate_connection(const ConnectionSpec& connection) {
  if (connection.id.empty()) {
    throw Error(ErrorKind::InvalidArgument, "connection id must be nonempty");
  }
  if (connection.connected_ids.size() < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "connection '" + connection.id + "' must name at least two volumes");
  }
  if (!connection.bounds.well_ordered()) {
    throw Error(ErrorKind::InvalidArgument,
                "connection '" + connection.id + "' has ill-ordered bounds " +
                    to_string(connection.bounds));
  }
}

BoundingVolume::BoundingVolume(std::string id, std::string volume_type,
                               std::string material, Box bounds)
    : id_(std::move(id)), volume_type_(std::move(volume_type)) {
  if (id_.empty()) throw Error(ErrorKind::InvalidArgument, "volume id must be nonempty");
  set_material(std::move(material));
  set_bounds(bounds);
}

BoundingVolume BoundingVolume::group(std::string id, std::string volume_type) {
  if (id.empty()) throw Error(ErrorKind::InvalidArgument, "volume id must be nonempty");
  BoundingVolume v;
  v.id_ = std::move(id);
  v.volume_type_ = std::move(volume_type);
  v.group_ = true;
  return v;
}

void BoundingVolume::set_material(std::string material) {
  if (material.empty()) {
    throw Error(ErrorKind::InvalidArgument, "volume '" + id_ + "': empty material");
  }
  if (group_ && material != kBlank) {
    throw Error(ErrorKind::InvalidArgument, "group '" + id_ + "' must stay blank");
  }
  material_ = std::move(material);
}

void BoundingVolume::set_bounds(Box bounds) {
  if (group_) {
    throw Error(ErrorKind::InvalidArgument, "group '" + id_ + "' derives its bounds");
  }
  if (!bounds.well_ordered()) {
    throw Error(ErrorKind::InvalidArgument,
                "volume '" + id_ + "': ill-ordered bounds " + to_string(bounds));
  }
  bounds_ = bounds;
}

Box BoundingVolume::bounds() const {
  if (!group_) return bounds_;
  bool first = true;
  Box out{};
  for (const auto& child : children_) {
    if (!child.has_extent()) continue;
    out = first ? child.bounds() : hull(out, child.bounds());
    first = false;
  }
  return out;
}

bool BoundingVolume::has_extent() const {
  if (!group_) return true;
  return std::any_of(children_.begin(), children_.end(),
                     [](const BoundingVolume& c) { return c.has_extent(); });
}

bool BoundingVolume::contains(Position p) const {
  return has_extent() && bounds().contains(p);
}

std::vector<std::string> BoundingVolume::subtree_ids() const {
  std::vector<std::string> ids;
  visit([&](const BoundingVolume& v) {
    ids.push_back(v.id_);
    for (const auto& e : v.entities_) ids.push_back(e.id);
    for (const auto& o : v.objects_) ids.push_back(o.id);
    for (const auto& c : v.connections_) ids.push_back(c.id);
  });
  return ids;
}

void BoundingVolume::require_inside(Position p, std::string_view what) const {
  if (!contains(p)) {
    throw Error(ErrorKind::OutOfBounds, std::string(what) + " at " + to_string(p) +
                                            " lies outside volume '" + id_ + "' " +
                                            to_string(bounds()));
  }
}

void BoundingVolume::require_fresh_id(const std::string& id) const {
  const auto ids = subtree_ids();
  if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
    throw Error(ErrorKind::DuplicateId, "id '" + id + "' is already in use");
  }
}

BoundingVolume& BoundingVolume::add_child(BoundingVolume child) {
  const auto mine = subtree_ids();
  std::unordered_set<std::string> seen(mine.begin(), mine.end());
  for (const auto& id : child.subtree_ids()) {
    if (!seen.insert(id).second) {
      throw Error(ErrorKind::DuplicateId, "id '" + id + "' is already in use");
    }
  }
  if (!group_ && child.has_extent() && !bounds_.contains(child.bounds())) {
    throw Error(ErrorKind::OutOfBounds, "child '" + child.id_ + "' " +
                                            to_string(child.bounds()) +
                                            " exceeds volume '" + id_ + "' " +
                                            to_string(bounds_));
  }
  children_.push_back(std::move(child));
  return children_.back();
}

void BoundingVolume::add_block(BlockPlacement block) {
  if (block.material.empty()) {
    throw Error(ErrorKind::InvalidArgument, "block at " + to_string(block.position) +
                                                " has no material");
  }
  require_inside(block.position, "block");
  blocks_.push_back(std::move(block));
}

void BoundingVolume::add_entity(EntitySpec entity) {
  validate_entity(entity);
  require_inside(entity.position, "entity '" + entity.id + "'");
  require_fresh_id(entity.id);
  entities_.push_back(std::move(entity));
}

void BoundingVolume::add_object(ObjectSpec object) {
  if (object.id.empty() || object.block.material.empty()) {
    throw Error(ErrorKind::InvalidArgument, "object needs an id and a block material");
  }
  require_inside(object.block.position, "object '" + object.id + "'");
  require_fresh_id(object.id);
  objects_.push_back(std::move(object));
}

void BoundingVolume::add_connection(ConnectionSpec connection) {
  validate_connection(connection);
  require_fresh_id(connection.id);
  connections_.push_back(std::move(connection));
}

void BoundingVolume::generate_box(std::string_view material, const Margins& margins) {
  if (material.empty()) {
    throw Error(ErrorKind::InvalidArgument, "generate_box: empty material");
  }
  if (!has_extent()) {
    throw Error(ErrorKind::EmptyBox, "generate_box: volume '" + id_ + "' has no extent");
  }
  const Box box = inset(bounds(), margins);
  blocks_.reserve(blocks_.size() + box.volume());
  for (Coord x = box.top_left.x;; ++x) {
    for (Coord y = box.top_left.y;; ++y) {
      for (Coord z = box.top_left.z;; ++z) {
        blocks_.push_back({std::string(material), {x, y, z}});
        if (z == box.bottom_right.z) break;
      }
      if (y == box.bottom_right.y) break;
    }
    if (x == box.bottom_right.x) break;
  }
}

Position BoundingVolume::random_pos(SeededRng& rng, const Margins& margins) const {
  if (!has_extent()) {
    throw Error(ErrorKind::EmptyBox, "random_pos: volume '" + id_ + "' has no extent");
  }
  const Box box = inset(bounds(), margins);
  const auto x = rng.uniform_int(box.top_left.x, box.bottom_right.x);
  const auto y = rng.uniform_int(box.top_left.y, box.bottom_right.y);
  const auto z = rng.uniform_int(box.top_left.z, box.bottom_right.z);
  return {static_cast<Coord>(x), static_cast<Coord>(y), static_cast<Coord>(z)};
}

void BoundingVolume::shift(Delta d) {
  if (!group_) bounds_ = shifted(bounds_, d);
  for (auto& b : blocks_) b.position = shifted(b.position, d);
  for (auto& e : entities_) e.position = shifted(e.position, d);
  for (auto& o : objects_) o.block.position = shifted(o.block.position, d);
  for (auto& c : children_) c.shift(d);
}

BoundingVolume shift_volume(BoundingVolume v, Delta d) {
  v.shift(d);
  return v;
}

}  // namespace voxgen
