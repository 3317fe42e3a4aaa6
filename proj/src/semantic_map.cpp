#include "voxgen/semantic_map.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "voxgen/error.hpp"

namespace voxgen {

const LocationRecord* SemanticMap::find_location(const std::string& wanted) const {
  auto it = std::lower_bound(locations.begin(), locations.end(), wanted,
                             [](const LocationRecord& l, const std::string& w) {
                               return l.id < w;
                             });
  if (it != locations.end() && it->id == wanted) return &*it;
  // Not canonical: fall back to a scan.
  for (const auto& l : locations)
    if (l.id == wanted) return &l;
  return nullptr;
}

namespace {

void add_volume(SemanticMap& map, const BoundingVolume& v) {
  LocationRecord loc{v.id(), v.volume_type(), v.material(), v.bounds(), {}};
  for (const auto& child : v.children()) loc.child_ids.push_back(child.id());
  map.locations.push_back(std::move(loc));
  for (const auto& c : v.connections())
    map.connections.push_back({c.id, c.connection_type, c.bounds, c.connected_ids});
  for (const auto& e : v.entities())
    map.entities.push_back({e.id, e.entity_type, e.position, v.id(), e.equipment});
  for (const auto& o : v.objects())
    map.objects.push_back(
        {o.id, o.object_type, o.block.material, o.block.position, v.id()});
  for (const auto& child : v.children()) add_volume(map, child);
}

template <typename T>
void sort_by_id(std::vector<T>& items) {
  std::sort(items.begin(), items.end(),
            [](const T& a, const T& b) { return a.id < b.id; });
}

}  // namespace

SemanticMap build_semantic_map(const WorldModel& world) {
  SemanticMap map;
  map.id = world.id();
  for (const auto& v : world.volumes()) add_volume(map, v);
  for (const auto& c : world.connections())
    map.connections.push_back({c.id, c.connection_type, c.bounds, c.connected_ids});
  for (const auto& e : world.entities())
    map.entities.push_back({e.id, e.entity_type, e.position, std::nullopt, e.equipment});
  for (const auto& o : world.objects())
    map.objects.push_back(
        {o.id, o.object_type, o.block.material, o.block.position, std::nullopt});
  canonicalize(map);
  return map;
}

void canonicalize(SemanticMap& map) {
  sort_by_id(map.locations);
  sort_by_id(map.connections);
  sort_by_id(map.entities);
  sort_by_id(map.objects);
}

void validate(const SemanticMap& map) {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::Validation, msg); };

  std::unordered_set<std::string> all_ids;
  auto claim = [&](const std::string& id, const char* what) {
    if (id.empty()) fail(std::string(what) + " with empty id");
    if (!all_ids.insert(id).second) fail("duplicate id '" + id + "'");
  };
  std::unordered_map<std::string, const LocationRecord*> locations;
  for (const auto& l : map.locations) {
    claim(l.id, "location");
    locations.emplace(l.id, &l);
    if (!l.bounds.well_ordered()) fail("location '" + l.id + "' has ill-ordered bounds");
  }
  for (const auto& c : map.connections) {
    claim(c.id, "connection");
    if (!c.bounds.well_ordered()) fail("connection '" + c.id + "' has ill-ordered bounds");
    if (c.connected_ids.size() < 2) fail("connection '" + c.id + "' names fewer than two locations");
    for (const auto& target : c.connected_ids)
      if (!locations.count(target))
        fail("connection '" + c.id + "' names unknown location '" + target + "'");
  }
  for (const auto& e : map.entities) {
    claim(e.id, "entity");
    if (e.location_id && !locations.count(*e.location_id))
      fail("entity '" + e.id + "' names unknown location '" + *e.location_id + "'");
  }
  for (const auto& o : map.objects) {
    claim(o.id, "object");
    if (o.location_id && !locations.count(*o.location_id))
      fail("object '" + o.id + "' names unknown location '" + *o.location_id + "'");
  }

  // Forest: every child resolves and has exactly one parent; no cycles.
  std::unordered_map<std::string, std::string> parent;
  for (const auto& l : map.locations) {
    for (const auto& child : l.child_ids) {
      if (!locations.count(child))
        fail("location '" + l.id + "' names unknown child '" + child + "'");
      if (!parent.emplace(child, l.id).second)
        fail("location '" + child + "' has more than one parent");
    }
  }
  for (const auto& l : map.locations) {
    // Walking up from any node must end at a root within |locations| steps.
    std::string cursor = l.id;
    for (std::size_t steps = 0;; ++steps) {
      auto it = parent.find(cursor);
      if (it == parent.end()) break;
      if (steps > map.locations.size()) fail("location hierarchy has a cycle through '" + l.id + "'");
      cursor = it->second;
    }
  }
}

}  // namespace voxgen
