#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "voxgen/volume.hpp"

namespace voxgen {

/// Root container: top-level volumes plus loose world-level items.
///
/// Construction is single-owner. finalize() validates the whole model and
/// freezes it; later add_* calls throw Error(Frozen).
class WorldModel {
 public:
  explicit WorldModel(std::string id = "world") : id_(std::move(id)) {}

  const std::string& id() const noexcept { return id_; }
  bool finalized() const noexcept { return finalized_; }

  const std::vector<BoundingVolume>& volumes() const noexcept { return volumes_; }
  const std::vector<BlockPlacement>& blocks() const noexcept { return blocks_; }
  const std::vector<EntitySpec>& entities() const noexcept { return entities_; }
  const std::vector<ObjectSpec>& objects() const noexcept { return objects_; }
  const std::vector<ConnectionSpec>& connections() const noexcept {
    return connections_;
  }

  BoundingVolume& add_volume(BoundingVolume volume);
  void add_block(BlockPlacement block);
  void add_entity(EntitySpec entity);
  void add_object(ObjectSpec object);
  void add_connection(ConnectionSpec connection);

  /// Checks global id uniqueness, that every connection names existing
  /// volumes, and that every child and item lies inside its declaring
  /// volume. Marks the world immutable on success.
  void finalize();

  /// Copy translated by d (volumes and loose items; connections stay put).
  /// The copy is not finalized.
  WorldModel shifted(Delta d) const;

  template <typename F>
  void visit_volumes(F&& f) const {
    for (const auto& v : volumes_) v.visit(f);
  }

  friend bool operator==(const WorldModel& a, const WorldModel& b) {
    return a.id_ == b.id_ && a.volumes_ == b.volumes_ && a.blocks_ == b.blocks_ &&
           a.entities_ == b.entities_ && a.objects_ == b.objects_ &&
           a.connections_ == b.connections_;
  }

 private:
  void require_mutable() const;
  void claim(const std::string& id);

  std::string id_;
  std::vector<BoundingVolume> volumes_;
  std::vector<BlockPlacement> blocks_;
  std::vector<EntitySpec> entities_;
  std::vector<ObjectSpec> objects_;
  std::vector<ConnectionSpec> connections_;
  std::unordered_set<std::string> ids_;
  bool finalized_ = false;
};

}  // namespace voxgen
