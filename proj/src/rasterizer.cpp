#include "voxgen/rasterizer.hpp"

#include <algorithm>
#include <exception>
#include <unordered_map>

#include "voxgen/error.hpp"

namespace voxgen {

namespace {

struct Write {
  Position position;
  const std::string* material;
};

template <typename Emit>
void for_each_shell_cell(const Box& box, Emit&& emit) {
  const auto& lo = box.top_left;
  const auto& hi = box.bottom_right;
  for (Coord y = lo.y;; ++y) {
    for (Coord x = lo.x;; ++x) {
      const bool x_edge = x == lo.x || x == hi.x;
      for (Coord z = lo.z;; ++z) {
        if (x_edge || z == lo.z || z == hi.z) emit(Position{x, y, z});
        if (z == hi.z) break;
      }
      if (x == hi.x) break;
    }
    if (y == hi.y) break;
  }
}

template <typename Emit>
void for_each_roof_cell(const Box& box, Emit&& emit) {
  for (Coord x = box.top_left.x;; ++x) {
    for (Coord z = box.top_left.z;; ++z) {
      emit(Position{x, box.bottom_right.y, z});
      if (z == box.bottom_right.z) break;
    }
    if (x == box.bottom_right.x) break;
  }
}

void check_items(const BoundingVolume& v) {
  auto inside = [&](Position p, const std::string& what) {
    if (!v.contains(p)) {
      throw Error(ErrorKind::OutOfBounds, what + " at " + to_string(p) +
                                              " lies outside volume '" + v.id() + "'");
    }
  };
  for (const auto& b : v.blocks()) inside(b.position, "block");
  for (const auto& o : v.objects()) inside(o.block.position, "object '" + o.id + "'");
  for (const auto& e : v.entities()) inside(e.position, "entity '" + e.id + "'");
}

/// Steps 1-4 of the write order for a single volume.
template <typename Emit>
void emit_volume(const BoundingVolume& v, Emit&& emit) {
  if (!v.is_blank() && v.has_extent()) {
    const Box box = v.bounds();
    const std::string* material = &v.material();
    for_each_shell_cell(box, [&](Position p) { emit(p, material); });
    if (v.has_roof()) for_each_roof_cell(box, [&](Position p) { emit(p, material); });
  }
  for (const auto& b : v.blocks()) emit(b.position, &b.material);
  for (const auto& o : v.objects()) emit(o.block.position, &o.block.material);
}

template <typename Emit>
void emit_world_items(const WorldModel& world, Emit&& emit) {
  for (const auto& b : world.blocks()) emit(b.position, &b.material);
  for (const auto& o : world.objects()) emit(o.block.position, &o.block.material);
}

std::vector<const ConnectionSpec*> carving_connections(const WorldModel& world) {
  std::vector<const ConnectionSpec*> out;
  world.visit_volumes([&](const BoundingVolume& v) {
    for (const auto& c : v.connections())
      if (c.carves()) out.push_back(&c);
  });
  for (const auto& c : world.connections())
    if (c.carves()) out.push_back(&c);
  return out;
}

template <typename Cells>
void carve(Cells& cells, const WorldModel& world) {
  for (const auto* c : carving_connections(world)) {
    const Box& b = c->bounds;
    if (b.volume() < cells.size()) {
      for (Coord x = b.top_left.x;; ++x) {
        for (Coord y = b.top_left.y;; ++y) {
          for (Coord z = b.top_left.z;; ++z) {
            cells.erase(Position{x, y, z});
            if (z == b.bottom_right.z) break;
          }
          if (y == b.bottom_right.y) break;
        }
        if (x == b.bottom_right.x) break;
      }
    } else {
      std::erase_if(cells, [&](const auto& kv) { return b.contains(kv.first); });
    }
  }
}

void collect_entities(const WorldModel& world, std::vector<EntitySpec>& out) {
  world.visit_volumes([&](const BoundingVolume& v) {
    out.insert(out.end(), v.entities().begin(), v.entities().end());
  });
  out.insert(out.end(), world.entities().begin(), world.entities().end());
}

}  // namespace

BlockGrid rasterize_serial(const WorldModel& world) {
  BlockGrid grid;
  auto write = [&](Position p, const std::string* material) {
    grid.cells.insert_or_assign(p, *material);
  };
  world.visit_volumes([&](const BoundingVolume& v) {
    check_items(v);
    emit_volume(v, write);
  });
  emit_world_items(world, write);
  carve(grid.cells, world);
  collect_entities(world, grid.entities);
  return grid;
}

BlockGrid rasterize(const WorldModel& world) {
  std::vector<const BoundingVolume*> order;
  world.visit_volumes([&](const BoundingVolume& v) { order.push_back(&v); });

  const auto count = static_cast<std::ptrdiff_t>(order.size());
  std::vector<std::vector<Write>> logs(order.size());
  std::vector<std::exception_ptr> failures(order.size());

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      check_items(*order[i]);
      auto& log = logs[i];
      emit_volume(*order[i], [&](Position p, const std::string* m) {
        log.push_back({p, m});
      });
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  // Report the first failure in traversal order, as the serial path would.
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  std::size_t total = 0;
  for (const auto& log : logs) total += log.size();
  std::unordered_map<Position, const std::string*, PositionHash> cells;
  cells.reserve(total);
  auto write = [&](Position p, const std::string* m) { cells.insert_or_assign(p, m); };
  for (const auto& log : logs)
    for (const auto& w : log) write(w.position, w.material);
  emit_world_items(world, write);
  carve(cells, world);

  std::vector<std::pair<Position, const std::string*>> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  BlockGrid grid;
  for (const auto& [p, m] : sorted) grid.cells.emplace_hint(grid.cells.end(), p, *m);
  collect_entities(world, grid.entities);
  return grid;
}

BlockGrid translate(const BlockGrid& grid, Delta d) {
  BlockGrid out;
  for (const auto& [p, m] : grid.cells) out.cells.emplace(shifted(p, d), m);
  out.entities = grid.entities;
  for (auto& e : out.entities) e.position = shifted(e.position, d);
  return out;
}

std::vector<CellDiff> diff_grids(const BlockGrid& a, const BlockGrid& b) {
  std::vector<CellDiff> out;
  auto ia = a.cells.begin();
  auto ib = b.cells.begin();
  while (ia != a.cells.end() || ib != b.cells.end()) {
    if (ib == b.cells.end() || (ia != a.cells.end() && ia->first < ib->first)) {
      out.push_back({ia->first, ia->second, std::nullopt});
      ++ia;
    } else if (ia == a.cells.end() || ib->first < ia->first) {
      out.push_back({ib->first, std::nullopt, ib->second});
      ++ib;
    } else {
      if (ia->second != ib->second) out.push_back({ia->first, ia->second, ib->second});
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::uint64_t shell_cell_count(const Box& box) {
  const auto w = static_cast<std::uint64_t>(box.size_x());
  const auto d = static_cast<std::uint64_t>(box.size_z());
  const auto h = static_cast<std::uint64_t>(box.size_y());
  const std::uint64_t inner = (w > 2 && d > 2) ? (w - 2) * (d - 2) : 0;
  return h * (w * d - inner);
}

}  // namespace voxgen
