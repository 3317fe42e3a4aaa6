#include "voxgen/world.hpp"

#include <unordered_map>

#include "voxgen/error.hpp"

namespace voxgen {

void WorldModel::require_mutable() const {
  if (finalized_) {
    throw Error(ErrorKind::Frozen, "world '" + id_ + "' is finalized");
  }
}

void WorldModel::claim(const std::string& id) {
  if (!ids_.insert(id).second) {
    throw Error(ErrorKind::DuplicateId, "id '" + id + "' is already in use");
  }
}

BoundingVolume& WorldModel::add_volume(BoundingVolume volume) {
  require_mutable();
  const auto ids = volume.subtree_ids();
  std::unordered_set<std::string> fresh;
  for (const auto& id : ids) {
    if (ids_.count(id) || !fresh.insert(id).second) {
      throw Error(ErrorKind::DuplicateId, "id '" + id + "' is already in use");
    }
  }
  ids_.insert(ids.begin(), ids.end());
  volumes_.push_back(std::move(volume));
  return volumes_.back();
}

void WorldModel::add_block(BlockPlacement block) {
  require_mutable();
  if (block.material.empty()) {
    throw Error(ErrorKind::InvalidArgument, "block at " + to_string(block.position) +
                                                " has no material");
  }
  blocks_.push_back(std::move(block));
}

void WorldModel::add_entity(EntitySpec entity) {
  require_mutable();
  validate_entity(entity);
  claim(entity.id);
  entities_.push_back(std::move(entity));
}

void WorldModel::add_object(ObjectSpec object) {
  require_mutable();
  if (object.id.empty() || object.block.material.empty()) {
    throw Error(ErrorKind::InvalidArgument, "object needs an id and a block material");
  }
  claim(object.id);
  objects_.push_back(std::move(object));
}

void WorldModel::add_connection(ConnectionSpec connection) {
  require_mutable();
  validate_connection(connection);
  claim(connection.id);
  connections_.push_back(std::move(connection));
}

namespace {

void check_contents(const BoundingVolume& v) {
  auto inside = [&](Position p, const std::string& what) {
    if (!v.contains(p)) {
      throw Error(ErrorKind::OutOfBounds, what + " at " + to_string(p) +
                                              " lies outside volume '" + v.id() + "'");
    }
  };
  for (const auto& b : v.blocks()) inside(b.position, "block");
  for (const auto& e : v.entities()) inside(e.position, "entity '" + e.id + "'");
  for (const auto& o : v.objects()) inside(o.block.position, "object '" + o.id + "'");
  if (!v.is_group()) {
    for (const auto& c : v.children()) {
      if (c.has_extent() && !v.bounds().contains(c.bounds())) {
        throw Error(ErrorKind::OutOfBounds,
                    "child '" + c.id() + "' exceeds volume '" + v.id() + "'");
      }
    }
  }
}

}  // namespace

void WorldModel::finalize() {
  require_mutable();
  // Rebuilt from scratch: volumes may have been edited through the references
  // returned by add_volume.
  std::unordered_map<std::string, bool> ids;  // id -> is a volume
  auto claim_id = [&](const std::string& id, bool is_volume) {
    if (!ids.emplace(id, is_volume).second) {
      throw Error(ErrorKind::DuplicateId, "id '" + id + "' is declared twice");
    }
  };
  std::vector<const ConnectionSpec*> connections;
  visit_volumes([&](const BoundingVolume& v) {
    claim_id(v.id(), true);
    for (const auto& e : v.entities()) claim_id(e.id, false);
    for (const auto& o : v.objects()) claim_id(o.id, false);
    for (const auto& c : v.connections()) {
      claim_id(c.id, false);
      connections.push_back(&c);
    }
    check_contents(v);
  });
  for (const auto& e : entities_) claim_id(e.id, false);
  for (const auto& o : objects_) claim_id(o.id, false);
  for (const auto& c : connections_) {
    claim_id(c.id, false);
    connections.push_back(&c);
  }
  for (const auto* c : connections) {
    for (const auto& target : c->connected_ids) {
      auto it = ids.find(target);
      if (it == ids.end() || !it->second) {
        throw Error(ErrorKind::DanglingConnection,
                    "connection '" + c->id + "' names unknown volume '" + target + "'");
      }
    }
  }
  ids_.clear();
  for (const auto& [id, _] : ids) ids_.insert(id);
  finalized_ = true;
}

WorldModel WorldModel::shifted(Delta d) const {
  WorldModel out(id_);
  out.volumes_ = volumes_;
  for (auto& v : out.volumes_) v.shift(d);
  out.blocks_ = blocks_;
  for (auto& b : out.blocks_) b.position = voxgen::shifted(b.position, d);
  out.entities_ = entities_;
  for (auto& e : out.entities_) e.position = voxgen::shifted(e.position, d);
  out.objects_ = objects_;
  for (auto& o : out.objects_) o.block.position = voxgen::shifted(o.block.position, d);
  out.connections_ = connections_;
  out.ids_ = ids_;
  return out;
}

}  // namespace voxgen
