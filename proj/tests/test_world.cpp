#include <gtest/gtest.h>

#include "voxgen/error.hpp"
#include "voxgen/world.hpp"

using namespace voxgen;

namespace {

template <typename F>
ErrorKind kind_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no voxgen::Error thrown";
  return ErrorKind::Io;
}

BoundingVolume room(const std::string& id, Box b) { return {id, "room", "stone", b}; }

}  // namespace

TEST(WorldModel, FinalizeFreezes) {
  WorldModel w;
  w.add_volume(room("a", {{0, 0, 0}, {3, 3, 3}}));
  w.finalize();
  EXPECT_TRUE(w.finalized());
  EXPECT_EQ(kind_of([&] { w.add_volume(room("b", {{5, 0, 0}, {8, 3, 3}})); }),
            ErrorKind::Frozen);
  EXPECT_EQ(kind_of([&] { w.add_block({"x", {0, 0, 0}}); }), ErrorKind::Frozen);
}

TEST(WorldModel, DuplicateIdsAcrossVolumes) {
  WorldModel w;
  w.add_volume(room("a", {{0, 0, 0}, {3, 3, 3}}));
  EXPECT_EQ(kind_of([&] { w.add_volume(room("a", {{5, 0, 0}, {8, 3, 3}})); }),
            ErrorKind::DuplicateId);
}

TEST(WorldModel, EntityIdCollidingWithVolume) {
  WorldModel w;
  w.add_volume(room("a", {{0, 0, 0}, {3, 3, 3}}));
  EXPECT_EQ(kind_of([&] { w.add_entity({"a", "zombie", {1, 1, 1}, {}}); }),
            ErrorKind::DuplicateId);
}

TEST(WorldModel, DanglingConnection) {
  WorldModel w;
  w.add_volume(room("a", {{0, 0, 0}, {3, 3, 3}}));
  w.add_connection({"d", "door", {{3, 1, 1}, {3, 2, 1}}, {"a", "ghost"}});
  EXPECT_EQ(kind_of([&] { w.finalize(); }), ErrorKind::DanglingConnection);
  EXPECT_FALSE(w.finalized());
}

TEST(WorldModel, ConnectionsMayNotNameEntities) {
  WorldModel w;
  w.add_volume(room("a", {{0, 0, 0}, {3, 3, 3}}));
  w.add_volume(room("b", {{4, 0, 0}, {7, 3, 3}}));
  w.add_entity({"z", "zombie", {1, 1, 1}, {}});
  w.add_connection({"d", "door", {{3, 1, 1}, {4, 2, 1}}, {"a", "z"}});
  EXPECT_EQ(kind_of([&] { w.finalize(); }), ErrorKind::DanglingConnection);
}

TEST(WorldModel, NestedConnectionResolvesGlobally) {
  WorldModel w;
  BoundingVolume a = room("a", {{0, 0, 0}, {3, 3, 3}});
  a.add_connection({"d", "door", {{3, 1, 1}, {3, 2, 1}}, {"a", "b"}});
  w.add_volume(a);
  w.add_volume(room("b", {{3, 0, 0}, {6, 3, 3}}));
  EXPECT_NO_THROW(w.finalize());
}

TEST(WorldModel, ShiftedCopyIsUnfrozenAndMoved) {
  WorldModel w;
  w.add_volume(room("a", {{0, 0, 0}, {3, 3, 3}}));
  w.add_block({"x", {9, 9, 9}});
  w.finalize();
  WorldModel s = w.shifted({1, 2, 3});
  EXPECT_FALSE(s.finalized());
  EXPECT_EQ(s.volumes()[0].bounds(), (Box{{1, 2, 3}, {4, 5, 6}}));
  EXPECT_EQ(s.blocks()[0].position, (Position{10, 11, 12}));
  EXPECT_EQ(s.shifted({-1, -2, -3}), w);
}

TEST(WorldModel, VisitIsPreOrder) {
  WorldModel w;
  BoundingVolume a = room("a", {{0, 0, 0}, {9, 9, 9}});
  a.add_child(room("a1", {{0, 0, 0}, {2, 2, 2}}));
  w.add_volume(a);
  w.add_volume(room("b", {{10, 0, 0}, {12, 3, 3}}));
  std::vector<std::string> order;
  w.visit_volumes([&](const BoundingVolume& v) { order.push_back(v.id()); });
  EXPECT_EQ(order, (std::vector<std::string>{"a", "a1", "b"}));
}
