#include "voxgen/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <string>

#include "voxgen/error.hpp"
#include "voxgen/generators.hpp"
#include "voxgen/query.hpp"
#include "voxgen/rasterizer.hpp"
#include "voxgen/serialization.hpp"
#include "voxgen/viz.hpp"

namespace voxgen::cli {

namespace {

struct CliConfig {
  int n = 0;
  std::uint64_t seed = 0;
  std::string room_probability = "1/2";
  int cell_size = 10;
  std::string hlr_out, llr_out;
  std::string hlr_in, llr_in, trace_in;
  std::string out;
  std::string mode;
  std::string palette;
  int scale = 8;
  bool no_labels = false;
};

void report(std::ostream& err, std::string_view kind, std::string message) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  err << "voxgen: error: " << kind << ": " << message << "\n";
}

CLI::App* add_generator(CLI::App& app, const char* name, const char* help, CliConfig& cfg) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("--out-hlr", cfg.hlr_out, "Semantic map (HLR) output path")->required();
  sub->add_option("--out-llr", cfg.llr_out, "Block map (LLR) output path")->required();
  return sub;
}

void emit(const WorldModel& world, const CliConfig& cfg) {
  write_world(world, rasterize(world), cfg.hlr_out, cfg.llr_out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Seeded voxel world generator with semantic maps", "voxgen"};
  app.require_subcommand(1);

  auto* gridworld = add_generator(app, "gridworld", "n x n grid of rooms joined by doors", cfg);
  cfg.n = 2;
  gridworld->add_option("--n", cfg.n, "Grid size")->check(CLI::PositiveNumber)->capture_default_str();

  auto* dungeon = add_generator(app, "dungeon", "Seeded dungeon of rooms and corridors", cfg);
  dungeon->add_option("--n", cfg.n, "Grid size (>= 2, default 4)")->check(CLI::Range(2, 4096));
  dungeon->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  dungeon->add_option("--room-prob", cfg.room_probability,
                      "Per-cell room probability, 'a/b' or decimal")
      ->capture_default_str();
  dungeon->add_option("--cell-size", cfg.cell_size,
                      "[experimental] voxels per grid cell edge (>= 8)")
      ->capture_default_str();

  auto* zombieworld = add_generator(app, "zombieworld", "3x3 plots of buildings and pits", cfg);
  zombieworld->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

  auto* tutorial = add_generator(app, "tutorial", "Two-room house with zombies", cfg);

  auto* viz = app.add_subcommand("viz", "Render a semantic map");
  viz->require_subcommand(1);
  auto* blueprint = viz->add_subcommand("blueprint", "Top-down SVG blueprint");
  blueprint->add_option("--hlr", cfg.hlr_in, "Semantic map")->required();
  blueprint->add_option("--llr", cfg.llr_in, "Block map for coloured columns");
  blueprint->add_option("--out", cfg.out, "SVG output path")->required();
  blueprint->add_option("--scale", cfg.scale, "Pixels per voxel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  blueprint->add_option("--palette", cfg.palette, "Palette JSON overriding colours");
  blueprint->add_flag("--no-labels", cfg.no_labels, "Omit location labels");
  auto* graph = viz->add_subcommand("graph", "DOT graph of the map");
  graph->add_option("--hlr", cfg.hlr_in, "Semantic map")->required();
  graph->add_option("--mode", cfg.mode, "hierarchy or topology")
      ->required()
      ->check(CLI::IsMember({"hierarchy", "topology"}));
  graph->add_option("--out", cfg.out, "DOT output path")->required();

  auto* monitor = app.add_subcommand("monitor", "Location transitions of player traces");
  monitor->add_option("--hlr", cfg.hlr_in, "Semantic map")->required();
  monitor->add_option("--trace", cfg.trace_in, "Line-delimited trace")->required();
  monitor->add_option("--out", cfg.out, "Line-delimited events output")->required();

  auto* predicates = app.add_subcommand("predicates", "Planning predicates of a map");
  predicates->add_option("--hlr", cfg.hlr_in, "Semantic map")->required();
  predicates->add_option("--out", cfg.out, "Plain-text output, one fact per line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (gridworld->parsed()) {
      emit(gen_gridworld(cfg.n), cfg);
    } else if (dungeon->parsed()) {
      DungeonParams p;
      if (dungeon->count("--n")) p.n = cfg.n;
      p.seed = cfg.seed;
      p.room_probability = Probability::parse(cfg.room_probability);
      p.cell_footprint = cfg.cell_size;
      p.validate();
      emit(gen_dungeon(p), cfg);
    } else if (zombieworld->parsed()) {
      emit(gen_zombieworld(cfg.seed), cfg);
    } else if (tutorial->parsed()) {
      emit(gen_tutorial_house(), cfg);
    } else if (blueprint->parsed()) {
      BlueprintStyle style = BlueprintStyle::defaults();
      style.voxel_pixel_scale = cfg.scale;
      style.labels = !cfg.no_labels;
      if (!cfg.palette.empty()) load_palette(cfg.palette, style);
      const auto map = read_semantic_map(cfg.hlr_in);
      std::optional<BlockMapDocument> blocks;
      if (!cfg.llr_in.empty()) blocks = read_block_map(cfg.llr_in);
      write_text_file(cfg.out, render_blueprint(map, blocks, style));
    } else if (graph->parsed()) {
      const auto map = read_semantic_map(cfg.hlr_in);
      write_text_file(cfg.out, render_graph(map, *parse_graph_mode(cfg.mode)));
    } else if (monitor->parsed()) {
      const LocationIndex index(read_semantic_map(cfg.hlr_in));
      const auto trace = parse_trace(read_text_file(cfg.trace_in), cfg.trace_in);
      write_text_file(cfg.out, format_transitions(transitions(index, trace)));
    } else if (predicates->parsed()) {
      const LocationIndex index(read_semantic_map(cfg.hlr_in));
      std::string text;
      for (const auto& fact : export_predicates(index)) text += fact + "\n";
      write_text_file(cfg.out, text);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) {
      report(err, "usage", e.what());
      return kExitUsage;
    }
    report(err, to_string(e.kind()), e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    report(err, "internal", e.what());
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace voxgen::cli
