#include "voxgen/generators.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "voxgen/error.hpp"

namespace voxgen {

namespace {

std::string cell_name(const std::string& prefix, int row, int col) {
  return prefix + "_" + std::to_string(row) + "_" + std::to_string(col);
}

Box make_box(Coord x0, Coord y0, Coord z0, Coord x1, Coord y1, Coord z1) {
  return {{x0, y0, z0}, {x1, y1, z1}};
}

int draw_count(SeededRng& rng, IntRange range) {
  return static_cast<int>(rng.uniform_int(range.low, range.high));
}

/// Moves k randomly chosen elements to the front (partial Fisher-Yates),
/// one draw per element.
template <typename T>
void partial_shuffle(std::vector<T>& items, std::size_t k, SeededRng& rng) {
  for (std::size_t i = 0; i < k && i < items.size(); ++i) {
    const auto j = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(i),
                        static_cast<std::int64_t>(items.size()) - 1));
    std::swap(items[i], items[j]);
  }
}

// ---------------------------------------------------------------- gridworld

constexpr Coord kGridRoomEdge = 7;
constexpr Coord kGridStride = kGridRoomEdge - 1;
constexpr Coord kGridRoomHeight = 4;

}  // namespace

WorldModel gen_gridworld(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "gridworld: n must be >= 1");
  WorldModel world("gridworld");
  const Coord top = kGroundY + kGridRoomHeight - 1;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Coord x0 = c * kGridStride;
      const Coord z0 = r * kGridStride;
      world.add_volume(BoundingVolume(
          cell_name("room", r, c), "room", "stone_bricks",
          make_box(x0, kGroundY, z0, x0 + kGridRoomEdge - 1, top, z0 + kGridRoomEdge - 1)));
    }
  }
  const Coord mid = kGridRoomEdge / 2;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Coord x0 = c * kGridStride;
      const Coord z0 = r * kGridStride;
      if (c + 1 < n) {
        const Coord x = x0 + kGridStride;
        world.add_connection({cell_name("door", r, c) + "_east", std::string(kDoor),
                              make_box(x, kGroundY + 1, z0 + mid, x, kGroundY + 2, z0 + mid),
                              {cell_name("room", r, c), cell_name("room", r, c + 1)}});
      }
      if (r + 1 < n) {
        const Coord z = z0 + kGridStride;
        world.add_connection({cell_name("door", r, c) + "_south", std::string(kDoor),
                              make_box(x0 + mid, kGroundY + 1, z, x0 + mid, kGroundY + 2, z),
                              {cell_name("room", r, c), cell_name("room", r + 1, c)}});
      }
    }
  }
  world.finalize();
  return world;
}

// ------------------------------------------------------------------ dungeon

void DungeonParams::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::InvalidArgument, "dungeon: " + what);
  };
  auto check_range = [&](IntRange r, const char* name) {
    if (r.low < 0 || r.low > r.high) fail(std::string(name) + " must satisfy 0 <= low <= high");
  };
  if (n < 2) fail("n must be >= 2");
  if (cell_footprint < 8) fail("cell_footprint must be >= 8");
  if (n > 4096 || static_cast<std::int64_t>(n) * cell_footprint > (1 << 24)) {
    fail("grid too large");
  }
  if (room_probability.denominator == 0 || room_probability.numerator == 0 ||
      room_probability.numerator > room_probability.denominator) {
    fail("room_probability must lie in (0, 1]");
  }
  check_range(treasure_range, "treasure_range");
  check_range(monster_range, "monster_range");
  check_range(lava_patch_range, "lava_patch_range");
  check_range(spiderweb_range, "spiderweb_range");
  const std::int64_t free_cells =
      static_cast<std::int64_t>(cell_footprint - 5) * (cell_footprint - 5);
  if (treasure_range.high + monster_range.high > free_cells) {
    fail("treasure_range.high + monster_range.high exceeds the " +
         std::to_string(free_cells) + " free cells of a room");
  }
  if (max_attempts < 1) fail("max_attempts must be >= 1");
}

namespace {

constexpr Coord kDungeonRoomHeight = 5;
constexpr Coord kCorridorHeight = 3;

struct DungeonLayout {
  Coord footprint;

  Box room_box(int r, int c) const {
    const Coord x0 = c * footprint + 1;
    const Coord z0 = r * footprint + 1;
    return make_box(x0, kGroundY, z0, x0 + footprint - 3, kGroundY + kDungeonRoomHeight - 1,
                    z0 + footprint - 3);
  }
  Coord center_x(int c) const { return c * footprint + footprint / 2; }
  Coord center_z(int r) const { return r * footprint + footprint / 2; }
};

struct RoomKind {
  const char* material;
  const char* treasure;
  const char* monster;
};

constexpr RoomKind kStoneRoom{"stone_bricks", "diamond_block", "wither_skeleton"};
constexpr RoomKind kNetherRoom{"nether_bricks", "gold_block", "blaze"};

BoundingVolume make_dungeon_room(int r, int c, const DungeonParams& p,
                                 const DungeonLayout& layout, SeededRng& rng) {
  const bool nether = rng.uniform_int(0, 1) == 1;
  const RoomKind& kind = nether ? kNetherRoom : kStoneRoom;
  const std::string id = cell_name("room", r, c);
  const Box box = layout.room_box(r, c);
  BoundingVolume room(id, "room", kind.material, box);
  room.set_has_roof(true);
  room.generate_box(kind.material, {1, 1, 0, kDungeonRoomHeight - 1, 1, 1});

  const int treasures = draw_count(rng, p.treasure_range);
  const int monsters = draw_count(rng, p.monster_range);

  // Interior cells one above the floor, off the centre cross that corridor
  // passages are carved along.
  const Coord cx = layout.center_x(c);
  const Coord cz = layout.center_z(r);
  const Coord y = kGroundY + 1;
  std::vector<Position> free;
  for (Coord x = box.top_left.x + 1; x < box.bottom_right.x; ++x)
    for (Coord z = box.top_left.z + 1; z < box.bottom_right.z; ++z)
      if (x != cx && z != cz) free.push_back({x, y, z});
  partial_shuffle(free, static_cast<std::size_t>(treasures + monsters), rng);

  for (int i = 0; i < treasures; ++i) {
    room.add_object({id + "_treasure_" + std::to_string(i), "treasure",
                     {kind.treasure, free[static_cast<std::size_t>(i)]}});
  }
  for (int i = 0; i < monsters; ++i) {
    room.add_entity({id + "_monster_" + std::to_string(i), kind.monster,
                     free[static_cast<std::size_t>(treasures + i)], {}});
  }

  if (!nether) {
    const int webs = draw_count(rng, p.spiderweb_range);
    std::vector<Position> walls;
    const auto& lo = box.top_left;
    const auto& hi = box.bottom_right;
    for (Coord wy = kGroundY + 1; wy <= kGroundY + kDungeonRoomHeight - 2; ++wy) {
      for (Coord z = lo.z + 1; z < hi.z; ++z) walls.push_back({lo.x, wy, z});
      for (Coord z = lo.z + 1; z < hi.z; ++z) walls.push_back({hi.x, wy, z});
      for (Coord x = lo.x + 1; x < hi.x; ++x) walls.push_back({x, wy, lo.z});
      for (Coord x = lo.x + 1; x < hi.x; ++x) walls.push_back({x, wy, hi.z});
    }
    partial_shuffle(walls, static_cast<std::size_t>(webs), rng);
    for (int i = 0; i < webs && i < static_cast<int>(walls.size()); ++i) {
      room.add_block({"web", walls[static_cast<std::size_t>(i)]});
    }
  } else {
    const int patches = draw_count(rng, p.lava_patch_range);
    for (int i = 0; i < patches; ++i) {
      const auto x = static_cast<Coord>(
          rng.uniform_int(box.top_left.x + 1, box.bottom_right.x - 2));
      const auto z = static_cast<Coord>(
          rng.uniform_int(box.top_left.z + 1, box.bottom_right.z - 2));
      for (Coord dx = 0; dx < 2; ++dx)
        for (Coord dz = 0; dz < 2; ++dz) room.add_block({"lava", {x + dx, kGroundY, z + dz}});
    }
  }
  return room;
}

struct Cell {
  int row;
  int col;
};

struct Interval {
  Coord lo;
  Coord hi;
};

/// [lo, hi] minus the given open intervals (room interiors), sorted.
std::vector<Interval> subtract(Interval span, std::vector<Interval> holes) {
  std::sort(holes.begin(), holes.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  Coord cursor = span.lo;
  for (const auto& h : holes) {
    if (h.hi < cursor || h.lo > span.hi) continue;
    if (h.lo > cursor) out.push_back({cursor, h.lo - 1});
    cursor = std::max(cursor, h.hi + 1);
  }
  if (cursor <= span.hi) out.push_back({cursor, span.hi});
  return out;
}

Coord sign(Coord v) { return (v > 0) - (v < 0); }

void add_corridor(WorldModel& world, int index, Cell from, Cell to,
                  const std::vector<bool>& occupied, int n, const DungeonLayout& layout) {
  const std::string id = "corridor_" + std::to_string(index);
  const std::string from_id = cell_name("room", from.row, from.col);
  const std::string to_id = cell_name("room", to.row, to.col);
  const Coord ax = layout.center_x(from.col), az = layout.center_z(from.row);
  const Coord bx = layout.center_x(to.col), bz = layout.center_z(to.row);
  const bool x_leg = ax != bx;
  const bool z_leg = az != bz;
  const Coord floor_y = kGroundY;
  const Coord top_y = kGroundY + kCorridorHeight - 1;
  const Coord inset = 2;  // room interior starts two voxels into the cell

  std::vector<BoundingVolume> segments;
  std::vector<ConnectionSpec> passages;
  auto interior = [&](int cell) {
    const Coord lo = cell * layout.footprint + inset;
    return Interval{lo, lo + layout.footprint - 2 * inset - 1};
  };

  if (x_leg) {
    // Ends one voxel past the corner so its walls wrap the turn.
    const Coord end = bx + (z_leg ? sign(bx - ax) : 0);
    std::vector<Interval> holes;
    for (int c = 0; c < n; ++c)
      if (occupied[static_cast<std::size_t>(from.row * n + c)]) holes.push_back(interior(c));
    for (const auto& piece : subtract({std::min(ax, end), std::max(ax, end)}, holes)) {
      BoundingVolume seg(id + "_" + std::to_string(segments.size()), "corridor",
                         "stone_bricks",
                         make_box(piece.lo, floor_y, az - 1, piece.hi, top_y, az + 1));
      seg.generate_box("stone_bricks", {0, 0, 0, kCorridorHeight - 1, 1, 1});
      segments.push_back(std::move(seg));
    }
    passages.push_back({id + "_passage_x", std::string(kOpening),
                        make_box(std::min(ax, bx), floor_y + 1, az, std::max(ax, bx),
                                 floor_y + 2, az),
                        {from_id, to_id}});
  }
  if (z_leg) {
    const Coord start = az - (x_leg ? sign(bz - az) : 0);
    std::vector<Interval> holes;
    for (int r = 0; r < n; ++r)
      if (occupied[static_cast<std::size_t>(r * n + to.col)]) holes.push_back(interior(r));
    for (const auto& piece : subtract({std::min(start, bz), std::max(start, bz)}, holes)) {
      BoundingVolume seg(id + "_" + std::to_string(segments.size()), "corridor",
                         "stone_bricks",
                         make_box(bx - 1, floor_y, piece.lo, bx + 1, top_y, piece.hi));
      seg.generate_box("stone_bricks", {1, 1, 0, kCorridorHeight - 1, 0, 0});
      segments.push_back(std::move(seg));
    }
    passages.push_back({id + "_passage_z", std::string(kOpening),
                        make_box(bx, floor_y + 1, std::min(az, bz), bx, floor_y + 2,
                                 std::max(az, bz)),
                        {from_id, to_id}});
  }

  Box extent = passages.front().bounds;
  for (const auto& p : passages) extent = hull(extent, p.bounds);
  for (const auto& s : segments) extent = hull(extent, s.bounds());
  for (auto& s : segments) world.add_volume(std::move(s));
  world.add_connection({id, std::string(kCorridor), extent, {from_id, to_id}});
  for (auto& p : passages) world.add_connection(std::move(p));
}

}  // namespace

WorldModel gen_dungeon(const DungeonParams& params) {
  params.validate();
  const int n = params.n;
  SeededRng rng(params.seed);
  const DungeonLayout layout{params.cell_footprint};

  std::vector<bool> occupied;
  int attempt = 0;
  for (;; ++attempt) {
    if (attempt == params.max_attempts) {
      throw Error(ErrorKind::RetryExhausted,
                  "dungeon: fewer than two rooms after " +
                      std::to_string(params.max_attempts) + " attempts");
    }
    occupied.assign(static_cast<std::size_t>(n) * n, false);
    int count = 0;
    for (std::size_t i = 0; i < occupied.size(); ++i) {
      occupied[i] = rng.bernoulli(params.room_probability);
      count += occupied[i];
    }
    if (count >= 2) break;
  }

  WorldModel world("dungeon");
  std::vector<Cell> rooms;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!occupied[static_cast<std::size_t>(r * n + c)]) continue;
      world.add_volume(make_dungeon_room(r, c, params, layout, rng));
      rooms.push_back({r, c});
    }
  }

  for (std::size_t i = 1; i < rooms.size(); ++i) {
    const Cell a = rooms[i];
    // Every earlier room is already connected.
    std::size_t best = 0;
    int best_distance = -1;
    for (std::size_t j = 0; j < i; ++j) {
      const int d = std::abs(rooms[j].row - a.row) + std::abs(rooms[j].col - a.col);
      if (best_distance < 0 || d < best_distance) {
        best = j;
        best_distance = d;
      }
    }
    add_corridor(world, static_cast<int>(i - 1), a, rooms[best], occupied, n, layout);
  }
  world.finalize();
  return world;
}

// -------------------------------------------------------------- zombieworld

namespace {

constexpr Coord kPlotEdge = 12;
constexpr Coord kPlotStride = 14;
constexpr Coord kPlotOffset = 2;
constexpr Coord kYardEdge = kPlotOffset + 3 * kPlotStride;  // 44 voxels
constexpr Coord kBuildingHeight = 5;

bool corner_plot(int r, int c) { return (r == 0 || r == 2) && (c == 0 || c == 2); }

BoundingVolume make_building(int r, int c, SeededRng& rng) {
  const Coord px = kPlotOffset + c * kPlotStride;
  const Coord pz = kPlotOffset + r * kPlotStride;
  const std::string id = cell_name("building", r, c);
  const Coord top = kGroundY + kBuildingHeight - 1;

  auto room = [&](const std::string& suffix, Coord x0, Coord x1) {
    BoundingVolume v(id + "_" + suffix, "room", "bricks",
                     make_box(px + x0, kGroundY, pz + 2, px + x1, top, pz + kPlotEdge - 3));
    v.set_has_roof(true);
    v.generate_box("planks", {1, 1, 0, kBuildingHeight - 1, 1, 1});
    return v;
  };
  BoundingVolume west = room("room_1", 0, 6);
  BoundingVolume east = room("room_2", 6, kPlotEdge - 1);
  const Margins floor_level{1, 1, 1, kBuildingHeight - 2, 1, 1};
  west.add_entity({id + "_zombie", "zombie", west.random_pos(rng, floor_level), {}});
  east.add_entity({id + "_villager", "villager", east.random_pos(rng, floor_level), {}});

  BoundingVolume building = BoundingVolume::group(id, "building");
  const Coord door_z = pz + 5;
  building.add_child(std::move(west));
  building.add_child(std::move(east));
  building.add_connection({id + "_inner_door", std::string(kDoor),
                           make_box(px + 6, kGroundY + 1, door_z, px + 6, kGroundY + 2, door_z),
                           {id + "_room_1", id + "_room_2"}});
  building.add_connection({id + "_front_door", std::string(kDoor),
                           make_box(px + 3, kGroundY + 1, pz + 2, px + 3, kGroundY + 2, pz + 2),
                           {id + "_room_1", "zombieworld"}});
  return building;
}

}  // namespace

WorldModel gen_zombieworld(std::uint64_t seed) {
  SeededRng rng(seed);
  WorldModel world("zombieworld");
  BoundingVolume yard("zombieworld", "boundary", "cobblestone",
                      make_box(0, kGroundY - 2, 0, kYardEdge - 1, kGroundY + kBuildingHeight,
                               kYardEdge - 1));
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (corner_plot(r, c)) {
        yard.add_child(make_building(r, c, rng));
        continue;
      }
      const auto outcome = rng.uniform_int(0, 2);
      if (outcome == 2) continue;  // no pit on this plot
      const char* liquid = outcome == 0 ? "lava" : "water";
      const Coord px = kPlotOffset + c * kPlotStride;
      const Coord pz = kPlotOffset + r * kPlotStride;
      BoundingVolume pit(cell_name("pit", r, c), "pit", liquid,
                         make_box(px + 2, kGroundY - 2, pz + 2, px + kPlotEdge - 3,
                                  kGroundY - 1, pz + kPlotEdge - 3));
      pit.generate_box(liquid, {});
      yard.add_child(std::move(pit));
    }
  }
  // Internal walls in the gaps between plot columns, each spanning two rows.
  const Coord wall_top = kGroundY + 2;
  yard.add_child(BoundingVolume(
      "wall_1", "wall", "cobblestone",
      make_box(kPlotStride, kGroundY, kPlotOffset, kPlotStride, wall_top,
               kPlotOffset + kPlotStride + kPlotEdge - 1)));
  yard.add_child(BoundingVolume(
      "wall_2", "wall", "cobblestone",
      make_box(2 * kPlotStride + 1, kGroundY, kPlotOffset + kPlotStride,
               2 * kPlotStride + 1, wall_top, kPlotOffset + 2 * kPlotStride + kPlotEdge - 1)));
  world.add_volume(std::move(yard));
  world.finalize();
  return world;
}

// ----------------------------------------------------------------- tutorial

BoundingVolume make_tutorial_room(const std::string& id, Position top_left) {
  const Position bottom_right = shifted(top_left, {5, 4, 5});
  BoundingVolume room(id, "room", "log", {top_left, bottom_right});
  room.generate_box("planks", {1, 1, 0, 4, 1, 1});  // floor
  room.generate_box("glass", {0, 5, 1, 1, 1, 1});   // windows
  room.generate_box("glass", {5, 0, 1, 1, 1, 1});
  room.generate_box("glass", {1, 1, 1, 1, 0, 5});
  room.set_has_roof(true);
  SeededRng gen;  // fresh default-seeded engine per room
  const Position spot = room.random_pos(gen, {1, 1, 1, 2, 1, 1});
  room.add_entity({id + "_zombie", "zombie", spot, {}});
  return room;
}

WorldModel gen_tutorial_house() {
  WorldModel world("tutorial");
  const Position top_left{1, 3, 1};
  BoundingVolume room1 = make_tutorial_room("room_1", top_left);
  BoundingVolume room2 = make_tutorial_room("room_2", top_left);
  room2.shift_x(5);

  BoundingVolume house = BoundingVolume::group("house", "house");
  house.add_child(std::move(room1));
  house.add_child(std::move(room2));
  world.add_volume(std::move(house));
  world.finalize();
  return world;
}

}  // namespace voxgen
