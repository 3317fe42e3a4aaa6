#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>
#include <set>

#include "support/temp_dir.hpp"
#include "voxgen/error.hpp"
#include "voxgen/generators.hpp"
#include "voxgen/query.hpp"
#include "voxgen/rasterizer.hpp"
#include "voxgen/viz.hpp"

using namespace voxgen;

namespace {

struct Rect {
  long x, y, w, h;
  friend bool operator==(const Rect&, const Rect&) = default;
};

std::map<std::string, Rect> location_rects(const std::string& svg) {
  std::map<std::string, Rect> out;
  static const std::regex re(
      R"re(<rect data-id="([^"]+)" x="(-?\d+)" y="(-?\d+)" width="(\d+)" height="(\d+)"/>)re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
       ++it) {
    const auto& m = *it;
    out[m[1]] = {std::stol(m[2]), std::stol(m[3]), std::stol(m[4]), std::stol(m[5])};
  }
  return out;
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

// Accepts the subset of DOT the renderer emits: a header, a node default,
// node statements and edge statements, a closing brace.
bool dot_well_formed(const std::string& dot, bool directed, std::size_t& nodes,
                     std::size_t& edges) {
  const std::string id = R"("(?:[^"\\]|\\.)*")";
  const std::regex header((directed ? "digraph " : "graph ") + id + " \\{");
  const std::regex node("  " + id + " \\[label=" + id + "\\];");
  const std::regex edge("  " + id + (directed ? " -> " : " -- ") + id + ";");
  std::istringstream in(dot);
  std::string line;
  nodes = edges = 0;
  if (!std::getline(in, line) || !std::regex_match(line, header)) return false;
  if (!std::getline(in, line) || line != "  node [shape=box];") return false;
  bool closed = false;
  while (std::getline(in, line)) {
    if (closed) return false;
    if (line == "}") {
      closed = true;
    } else if (std::regex_match(line, node)) {
      if (edges) return false;  // nodes come first
      ++nodes;
    } else if (std::regex_match(line, edge)) {
      ++edges;
    } else {
      return false;
    }
  }
  return closed;
}

}  // namespace

TEST(Blueprint, LeafRectanglesAreExactlyScaledBounds) {
  for (int scale : {1, 8, 13}) {
    BlueprintStyle style = BlueprintStyle::defaults();
    style.voxel_pixel_scale = scale;
    const SemanticMap m = build_semantic_map(gen_zombieworld(5));
    const auto rects = location_rects(render_blueprint(m, std::nullopt, style));
    std::size_t leaves = 0;
    for (const auto& l : m.locations) {
      if (!l.child_ids.empty()) {
        EXPECT_FALSE(rects.count(l.id)) << l.id;
        continue;
      }
      ++leaves;
      ASSERT_TRUE(rects.count(l.id)) << l.id;
      EXPECT_EQ(rects.at(l.id),
                (Rect{long{l.bounds.top_left.x} * scale, long{l.bounds.top_left.z} * scale,
                      l.bounds.size_x() * scale, l.bounds.size_z() * scale}))
          << l.id;
    }
    EXPECT_EQ(rects.size(), leaves);
  }
}

TEST(Blueprint, OneCellPerOccupiedColumnTopmostWins) {
  WorldModel w("w");
  BoundingVolume r{"r", "room", "blank", {{0, 0, 0}, {2, 5, 2}}};
  r.add_block({"stone", {1, 0, 1}});
  r.add_block({"gold_block", {1, 4, 1}});
  r.add_block({"stone", {0, 0, 0}});
  w.add_volume(r);
  w.finalize();
  BlueprintStyle style = BlueprintStyle::defaults();
  const std::string svg = render_blueprint(build_semantic_map(w),
                                           build_block_map(rasterize(w)), style);
  const auto start = svg.find("<g class=\"blocks\"");
  const auto end = svg.find("</g>", start);
  const std::string blocks = svg.substr(start, end - start);
  EXPECT_EQ(count_of(blocks, "<rect"), 2u);
  EXPECT_NE(blocks.find("x=\"8\" y=\"8\" width=\"8\" height=\"8\" fill=\"" +
                        style.color_of("gold_block") + "\""),
            std::string::npos)
      << blocks;
}

TEST(Blueprint, LabelsToggle) {
  const SemanticMap m = build_semantic_map(gen_tutorial_house());
  BlueprintStyle style = BlueprintStyle::defaults();
  EXPECT_EQ(count_of(render_blueprint(m, std::nullopt, style), "<text"), 2u);
  style.labels = false;
  EXPECT_EQ(count_of(render_blueprint(m, std::nullopt, style), "<text"), 0u);
}

TEST(Blueprint, EscapesMarkup) {
  SemanticMap m;
  m.id = "a<b>&\"c\"";
  m.locations = {{"r&d", "room", "x", {{0, 0, 0}, {1, 1, 1}}, {}}};
  const std::string svg = render_blueprint(m, std::nullopt, BlueprintStyle::defaults());
  EXPECT_NE(svg.find("a&lt;b&gt;&amp;&quot;c&quot;"), std::string::npos);
  EXPECT_NE(svg.find("data-id=\"r&amp;d\""), std::string::npos);
}

TEST(Palette, FileOverridesAndFallback) {
  voxgen::testing::TempDir dir;
  std::ofstream(dir / "p.json") << R"({"default":"#010203","materials":{"log":"#aabbcc"}})";
  BlueprintStyle style = BlueprintStyle::defaults();
  load_palette(dir / "p.json", style);
  EXPECT_EQ(style.color_of("log"), "#aabbcc");
  EXPECT_EQ(style.color_of("unobtainium"), "#010203");
  std::ofstream(dir / "bad.json") << R"({"materials":{"log":"red"}})";
  EXPECT_THROW(load_palette(dir / "bad.json", style), Error);
  style.voxel_pixel_scale = 0;
  EXPECT_THROW(style.validate(), Error);
}

TEST(Graph, HierarchyIsWellFormedDot) {
  const SemanticMap m = build_semantic_map(gen_zombieworld(2));
  std::size_t nodes = 0, edges = 0, expected_edges = 0;
  for (const auto& l : m.locations) expected_edges += l.child_ids.size();
  ASSERT_TRUE(dot_well_formed(render_graph(m, GraphMode::Hierarchy), true, nodes, edges));
  EXPECT_EQ(nodes, m.locations.size());
  EXPECT_EQ(edges, expected_edges);
}

TEST(Graph, TopologyEdgesPerConnectedPair) {
  DungeonParams p;
  p.n = 6;
  const SemanticMap m = build_semantic_map(gen_dungeon(p));
  const LocationIndex idx(m);
  std::size_t nodes = 0, edges = 0;
  const std::string dot = render_graph(m, GraphMode::Topology);
  ASSERT_TRUE(dot_well_formed(dot, false, nodes, edges)) << dot;
  EXPECT_EQ(edges, idx.connected_pairs().size());
  EXPECT_EQ(render_graph(m, GraphMode::Topology), dot);
}

TEST(Graph, LabelNewlineIsEscaped) {
  const std::string dot = render_graph(build_semantic_map(gen_tutorial_house()),
                                       GraphMode::Hierarchy);
  EXPECT_NE(dot.find(R"("room_1\nroom")"), std::string::npos) << dot;
  EXPECT_NE(dot.find(R"("house" -> "room_1";)"), std::string::npos);
}

TEST(Graph, ModeParsing) {
  EXPECT_EQ(parse_graph_mode("hierarchy"), GraphMode::Hierarchy);
  EXPECT_EQ(parse_graph_mode("topology"), GraphMode::Topology);
  EXPECT_EQ(parse_graph_mode("tree"), std::nullopt);
}
