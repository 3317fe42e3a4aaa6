#include "voxgen/viz.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "voxgen/error.hpp"
#include "voxgen/query.hpp"

namespace voxgen {

BlueprintStyle BlueprintStyle::defaults() {
  BlueprintStyle s;
  s.palette = {
      {"bricks", "#9c4a3c"},        {"cobblestone", "#7a7a7a"},
      {"diamond_block", "#5fe0d8"}, {"glass", "#c8e8f0"},
      {"gold_block", "#f2d13a"},    {"lava", "#e8601c"},
      {"log", "#6b4f2a"},           {"nether_bricks", "#4a1e24"},
      {"planks", "#b8945a"},        {"stone_bricks", "#8e8e8e"},
      {"water", "#3f76e4"},         {"web", "#e6e6e6"},
  };
  return s;
}

const std::string& BlueprintStyle::color_of(const std::string& material) const {
  auto it = palette.find(material);
  return it == palette.end() ? fallback_color : it->second;
}

namespace {

bool is_color(const std::string& c) {
  return c.size() == 7 && c[0] == '#' &&
         std::all_of(c.begin() + 1, c.end(), [](char ch) {
           return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f') ||
                  (ch >= 'A' && ch <= 'F');
         });
}

}  // namespace

void BlueprintStyle::validate() const {
  if (voxel_pixel_scale < 1)
    throw Error(ErrorKind::InvalidArgument, "blueprint scale must be >= 1");
  if (!is_color(fallback_color))
    throw Error(ErrorKind::InvalidArgument, "bad fallback colour '" + fallback_color + "'");
  for (const auto& [material, color] : palette)
    if (!is_color(color))
      throw Error(ErrorKind::InvalidArgument,
                  "bad colour '" + color + "' for material '" + material + "'");
}

void load_palette(const std::filesystem::path& path, BlueprintStyle& style) {
  const auto text = read_text_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::Validation, path.string() + ": " + msg);
  };
  if (!j.is_object()) fail("palette must be an object");
  if (auto it = j.find("default"); it != j.end()) {
    if (!it->is_string() || !is_color(it->get<std::string>())) fail("bad 'default' colour");
    style.fallback_color = it->get<std::string>();
  }
  if (auto it = j.find("materials"); it != j.end()) {
    if (!it->is_object()) fail("'materials' must be an object");
    for (const auto& [material, color] : it->items()) {
      if (!color.is_string() || !is_color(color.get<std::string>()))
        fail("bad colour for material '" + material + "'");
      style.palette[material] = color.get<std::string>();
    }
  }
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Formats twice_value / 2 exactly.
std::string half(std::int64_t twice_value) {
  std::string out = std::to_string(twice_value / 2);
  if (twice_value % 2 != 0) {
    if (twice_value < 0 && twice_value / 2 == 0) out = "-0";
    out += ".5";
  }
  return out;
}

struct PixelRect {
  std::int64_t x, y, w, h;
};

PixelRect to_pixels(const Box& b, std::int64_t scale) {
  return {std::int64_t{b.top_left.x} * scale, std::int64_t{b.top_left.z} * scale,
          b.size_x() * scale, b.size_z() * scale};
}

}  // namespace

std::string render_blueprint(const SemanticMap& map,
                             const std::optional<BlockMapDocument>& blocks,
                             const BlueprintStyle& style) {
  style.validate();
  const std::int64_t scale = style.voxel_pixel_scale;

  std::vector<const LocationRecord*> leaves;
  for (const auto& l : map.locations)
    if (l.child_ids.empty()) leaves.push_back(&l);
  std::sort(leaves.begin(), leaves.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });

  // Topmost block per column, columns in (x, z) order.
  std::map<std::pair<Coord, Coord>, const BlockRecord*> columns;
  if (blocks) {
    for (const auto& b : blocks->blocks) {
      auto [it, fresh] = columns.try_emplace({b.position.x, b.position.z}, &b);
      if (!fresh && b.position.y > it->second->position.y) it->second = &b;
    }
  }

  std::optional<Box> extent;
  auto grow = [&](const Box& b) { extent = extent ? hull(*extent, b) : b; };
  for (const auto& l : map.locations) grow(l.bounds);
  for (const auto& [xz, b] : columns) grow({b->position, b->position});
  Box frame = extent.value_or(Box{});
  frame.top_left.x -= 1;
  frame.top_left.z -= 1;
  frame.bottom_right.x += 1;
  frame.bottom_right.z += 1;
  const PixelRect f = to_pixels(frame, scale);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << f.x << " " << f.y << " "
      << f.w << " " << f.h << "\" width=\"" << f.w << "\" height=\"" << f.h << "\">\n";
  out << "  <title>" << xml_escape(map.id) << "</title>\n";
  out << "  <rect class=\"frame\" x=\"" << f.x << "\" y=\"" << f.y << "\" width=\"" << f.w
      << "\" height=\"" << f.h << "\" fill=\"#1f3b73\" stroke=\"#ffffff\"/>\n";
  if (!columns.empty()) {
    out << "  <g class=\"blocks\" stroke=\"none\">\n";
    for (const auto& [xz, b] : columns) {
      out << "    <rect x=\"" << std::int64_t{xz.first} * scale << "\" y=\""
          << std::int64_t{xz.second} * scale << "\" width=\"" << scale << "\" height=\""
          << scale << "\" fill=\"" << style.color_of(b->material) << "\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "  <g class=\"locations\" fill=\"none\" stroke=\"#ffffff\">\n";
  for (const auto* l : leaves) {
    const PixelRect r = to_pixels(l->bounds, scale);
    out << "    <rect data-id=\"" << xml_escape(l->id) << "\" x=\"" << r.x << "\" y=\"" << r.y
        << "\" width=\"" << r.w << "\" height=\"" << r.h << "\"/>\n";
  }
  out << "  </g>\n";
  if (style.labels && !leaves.empty()) {
    const std::int64_t font = std::max<std::int64_t>(scale * 3 / 2, 6);
    out << "  <g class=\"labels\" fill=\"#ffffff\" font-family=\"monospace\" font-size=\""
        << font << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
    for (const auto* l : leaves) {
      const PixelRect r = to_pixels(l->bounds, scale);
      out << "    <text x=\"" << half(2 * r.x + r.w) << "\" y=\"" << half(2 * r.y + r.h)
          << "\">" << xml_escape(l->id) << "</text>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::optional<GraphMode> parse_graph_mode(std::string_view text) {
  if (text == "hierarchy") return GraphMode::Hierarchy;
  if (text == "topology") return GraphMode::Topology;
  return std::nullopt;
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_graph(const SemanticMap& input, GraphMode mode) {
  SemanticMap map = input;
  canonicalize(map);
  const bool directed = mode == GraphMode::Hierarchy;
  std::ostringstream out;
  out << (directed ? "digraph " : "graph ") << dot_quote(map.id) << " {\n";
  out << "  node [shape=box];\n";
  for (const auto& l : map.locations) {
    out << "  " << dot_quote(l.id) << " [label=" << dot_quote(l.id + "\n" + l.type) << "];\n";
  }
  if (directed) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& l : map.locations)
      for (const auto& child : l.child_ids) edges.emplace_back(l.id, child);
    std::sort(edges.begin(), edges.end());
    for (const auto& [parent, child] : edges)
      out << "  " << dot_quote(parent) << " -> " << dot_quote(child) << ";\n";
  } else {
    const LocationIndex index(map);
    const auto& entries = index.entries();
    for (const auto& [a, b] : index.connected_pairs())
      out << "  " << dot_quote(entries[a].id) << " -- " << dot_quote(entries[b].id) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace voxgen
