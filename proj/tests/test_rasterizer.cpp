#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/random_worlds.hpp"
#include "voxgen/error.hpp"
#include "voxgen/generators.hpp"
#include "voxgen/rasterizer.hpp"
#include "voxgen/serialization.hpp"

using namespace voxgen;

namespace {

std::size_t count(const BlockGrid& g, const std::string& material) {
  std::size_t n = 0;
  for (const auto& [p, m] : g.cells) n += m == material;
  return n;
}

}  // namespace

TEST(Rasterize, ShellOnlyNoFloorOrCeiling) {
  WorldModel w;
  w.add_volume({"r", "room", "stone", {{0, 0, 0}, {4, 2, 4}}});
  w.finalize();
  const BlockGrid g = rasterize(w);
  EXPECT_EQ(g.cells.size(), 16u * 3u);
  EXPECT_FALSE(g.cells.count({2, 0, 2}));
  EXPECT_FALSE(g.cells.count({2, 2, 2}));
  EXPECT_TRUE(g.cells.count({0, 1, 3}));
}

TEST(Rasterize, RoofCoversFootprint) {
  WorldModel w;
  BoundingVolume r{"r", "room", "stone", {{0, 0, 0}, {4, 2, 4}}};
  r.set_has_roof(true);
  w.add_volume(r);
  w.finalize();
  const BlockGrid g = rasterize(w);
  EXPECT_EQ(g.cells.size(), 16u * 3u + 9u);
  EXPECT_EQ(g.cells.at({2, 2, 2}), "stone");
}

TEST(Rasterize, BlankVolumesEmitNothingOfTheirOwn) {
  WorldModel w;
  BoundingVolume r{"r", "room", "blank", {{0, 0, 0}, {4, 2, 4}}};
  r.set_has_roof(true);
  r.add_block({"gold", {1, 1, 1}});
  w.add_volume(r);
  w.finalize();
  const BlockGrid g = rasterize(w);
  ASSERT_EQ(g.cells.size(), 1u);
  EXPECT_EQ(g.cells.begin()->second, "gold");
}

TEST(Rasterize, LaterWritesWin) {
  WorldModel w;
  BoundingVolume parent{"p", "room", "stone", {{0, 0, 0}, {9, 3, 9}}};
  parent.add_block({"explicit", {0, 0, 0}});
  parent.add_object({"o", "victim", {"object", {0, 1, 0}}});
  BoundingVolume child{"c", "room", "wood", {{0, 0, 0}, {3, 3, 3}}};
  parent.add_child(child);
  w.add_volume(parent);
  w.add_block({"world", {0, 2, 0}});
  w.finalize();
  const BlockGrid g = rasterize(w);
  // child's shell is written after the parent's explicit and object blocks
  EXPECT_EQ(g.cells.at({0, 0, 0}), "wood");
  EXPECT_EQ(g.cells.at({0, 1, 0}), "wood");
  EXPECT_EQ(g.cells.at({0, 2, 0}), "world");
  EXPECT_EQ(g.cells.at({9, 0, 9}), "stone");
}

TEST(Rasterize, ObjectBlocksOverrideExplicitBlocks) {
  WorldModel w;
  BoundingVolume r{"r", "room", "blank", {{0, 0, 0}, {3, 3, 3}}};
  r.add_object({"o", "victim", {"gold", {1, 1, 1}}});
  r.add_block({"dirt", {1, 1, 1}});
  w.add_volume(r);
  w.finalize();
  EXPECT_EQ(rasterize(w).cells.at({1, 1, 1}), "gold");
}

TEST(Rasterize, DoorsCarveAfterEverything) {
  WorldModel w;
  w.add_volume({"a", "room", "stone", {{0, 0, 0}, {4, 3, 4}}});
  w.add_volume({"b", "room", "stone", {{4, 0, 0}, {8, 3, 4}}});
  w.add_block({"late", {4, 1, 2}});
  w.add_connection({"d", "door", {{4, 1, 2}, {4, 2, 2}}, {"a", "b"}});
  w.add_connection({"k", "corridor", {{4, 3, 2}, {4, 3, 2}}, {"a", "b"}});
  w.finalize();
  const BlockGrid g = rasterize(w);
  EXPECT_FALSE(g.cells.count({4, 1, 2}));
  EXPECT_FALSE(g.cells.count({4, 2, 2}));
  EXPECT_TRUE(g.cells.count({4, 0, 2}));
  EXPECT_TRUE(g.cells.count({4, 3, 2}));  // corridors do not carve
}

TEST(Rasterize, EntitiesInTraversalOrderWorldLast) {
  WorldModel w;
  BoundingVolume a{"a", "room", "stone", {{0, 0, 0}, {4, 3, 4}}};
  a.add_entity({"e2", "blaze", {1, 1, 1}, {}});
  a.add_child(BoundingVolume{"a1", "room", "stone", {{1, 0, 1}, {2, 2, 2}}});
  a.children()[0].add_entity({"e3", "zombie", {1, 1, 1}, {}});
  w.add_entity({"e1", "villager", {0, 0, 0}, {}});
  w.add_volume(a);
  w.finalize();
  const BlockGrid g = rasterize(w);
  ASSERT_EQ(g.entities.size(), 3u);
  EXPECT_EQ(g.entities[0].id, "e2");
  EXPECT_EQ(g.entities[1].id, "e3");
  EXPECT_EQ(g.entities[2].id, "e1");
}

TEST(Rasterize, TutorialMatchesWriteOrderOracle) {
  const auto oracle_one = voxgen::testing::tutorial_histogram_oracle(1);
  const auto oracle_two = voxgen::testing::tutorial_histogram_oracle(2);
  // frozen from the oracle
  EXPECT_EQ(oracle_one, (std::map<std::string, std::size_t>{
                            {"glass", 36}, {"log", 80}, {"planks", 16}}));
  EXPECT_EQ(oracle_two, (std::map<std::string, std::size_t>{
                            {"glass", 60}, {"log", 142}, {"planks", 32}}));

  WorldModel single;
  single.add_volume(make_tutorial_room("room_1", {1, 3, 1}));
  single.finalize();
  const BlockGrid g1 = rasterize(single);
  EXPECT_EQ(count(g1, "log"), 80u);
  EXPECT_EQ(count(g1, "glass"), 36u);
  EXPECT_EQ(count(g1, "planks"), 16u);

  const BlockGrid g2 = rasterize(gen_tutorial_house());
  EXPECT_EQ(voxgen::testing::histogram(build_block_map(g2)), oracle_two);
}

TEST(Rasterize, ParallelEqualsSerial) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const WorldModel w = voxgen::testing::random_world(s);
    EXPECT_EQ(rasterize(w), rasterize_serial(w)) << "seed " << s;
  }
  DungeonParams p;
  p.n = 8;
  p.seed = 3;
  const WorldModel d = gen_dungeon(p);
  EXPECT_EQ(rasterize(d), rasterize_serial(d));
}

TEST(Rasterize, TranslationEquivariance) {
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<int> d(-100, 100);
  for (std::uint64_t s = 0; s < 30; ++s) {
    const WorldModel w = voxgen::testing::random_world(s);
    const Delta delta{d(gen), d(gen), d(gen)};
    WorldModel moved = w.shifted(delta);
    moved.finalize();
    EXPECT_TRUE(diff_grids(rasterize(moved), translate(rasterize(w), delta)).empty());
  }
}

TEST(DiffGrids, ReportsPresenceAndMaterial) {
  BlockGrid a, b;
  a.cells[{0, 0, 0}] = "x";
  a.cells[{1, 0, 0}] = "y";
  b.cells[{1, 0, 0}] = "z";
  b.cells[{2, 0, 0}] = "w";
  const auto d = diff_grids(a, b);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0], (CellDiff{{0, 0, 0}, "x", std::nullopt}));
  EXPECT_EQ(d[1], (CellDiff{{1, 0, 0}, "y", "z"}));
  EXPECT_EQ(d[2], (CellDiff{{2, 0, 0}, std::nullopt, "w"}));
  EXPECT_TRUE(diff_grids(a, a).empty());
}

TEST(Rasterize, BareTutorialRoomIsAHundredLogs) {
  WorldModel w;
  w.add_volume({"room_1", "room", "log", {{1, 3, 1}, {6, 7, 6}}});
  w.finalize();
  const BlockGrid g = rasterize(w);
  EXPECT_EQ(g.cells.size(), voxgen::testing::shell_oracle({{1, 3, 1}, {6, 7, 6}}).size());
  EXPECT_EQ(g.cells.size(), 100u);  // frozen
}
