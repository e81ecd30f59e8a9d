// Command-line front end for the dining-layout library.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "dining/conflict.hpp"
#include "dining/experiment.hpp"
#include "dining/instance_gen.hpp"
#include "dining/render.hpp"
#include "dining/room.hpp"
#include "dining/seating.hpp"
#include "dining/solver.hpp"

namespace fs = std::filesystem;
using namespace dining;

namespace {

const std::vector<std::string> kSettings = {"baseline", "plexiglass", "sittingsense",
                                            "plexiglass+sittingsense"};
const std::vector<std::string> kMethods = {"exact", "close_corner", "random"};

// Writes to `path`, or to stdout when `path` is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_room_file(const Room& room, const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  const fs::path path = dir / (name + ".room");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  serialize_room(room, out);
  std::cout << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-occupancy dining-room layouts under distancing rules"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write instance room files");
  std::string family;
  int gen_n = 15, gen_t = 1, gen_w = 5, gen_count = 1;
  std::uint64_t gen_seed = 1;
  std::string gen_out = ".";
  gen->add_option("family", family, "nowalls | random | uniform")
      ->required()
      ->check(CLI::IsMember({"nowalls", "random", "uniform"}));
  gen->add_option("-n", gen_n, "Grid side")->check(CLI::Range(1, 1000));
  gen->add_option("-t", gen_t, "Wall length in blocks")->check(CLI::Range(1, 1000));
  gen->add_option("-w", gen_w, "Wall count (random family)")->check(CLI::Range(0, 100000));
  gen->add_option("--seed", gen_seed, "First seed; also the instance id (random family)");
  gen->add_option("--count", gen_count, "Number of consecutive seeds")->check(CLI::Range(1, 100000));
  gen->add_option("--out", gen_out, "Output directory");

  // shared options for room-based commands
  std::string room_path, setting = "baseline", method = "exact", out_path, layout_path;
  double time_limit = 60;
  std::uint64_t seed = 1;
  int runs = 1;
  bool verbose = false;
  auto add_room = [&](CLI::App* cmd) {
    cmd->add_option("room", room_path, "Room file")->required()->check(CLI::ExistingFile);
  };
  auto add_setting = [&](CLI::App* cmd) {
    cmd->add_option("--setting", setting, "Distancing variant")->check(CLI::IsMember(kSettings));
  };

  auto* solve = app.add_subcommand("solve", "Solve one room; CSV row to stdout, layout to --out");
  add_room(solve);
  add_setting(solve);
  solve->add_option("--method", method, "exact | close_corner | random")
      ->check(CLI::IsMember(kMethods));
  solve->add_option("--time-limit", time_limit, "Seconds for the exact solver")
      ->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed, "Seed for the random method");
  solve->add_option("--runs", runs, "Random runs to average")->check(CLI::Range(1, 100000));
  solve->add_option("--out", out_path, "Layout file (default: <room>.layout)");
  solve->add_flag("--verbose", verbose, "Solver progress on stderr");

  auto* render = app.add_subcommand("render", "Draw a layout as SVG");
  add_room(render);
  render->add_option("layout", layout_path, "Layout file")->required()->check(CLI::ExistingFile);
  render->add_option("--out", out_path, "SVG file (default: stdout)");

  auto* tables = app.add_subcommand("tables", "Reproduce the no-walls result tables as CSV");
  int n_max = 15;
  tables->add_option("--n-max", n_max, "Largest grid side")->check(CLI::Range(5, 40));
  tables->add_option("--time-limit", time_limit, "Seconds per exact solve")
      ->check(CLI::PositiveNumber);
  tables->add_option("--out", out_path, "CSV file (default: stdout)");

  auto* lp = app.add_subcommand("export-lp", "Write the set-packing model in LP format");
  add_room(lp);
  add_setting(lp);
  lp->add_option("--out", out_path, "LP file (default: stdout)");

  auto* graph = app.add_subcommand("export-graph", "Write the conflict graph (DIMACS-like)");
  add_room(graph);
  add_setting(graph);
  graph->add_option("--out", out_path, "Graph file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      for (int k = 0; k < gen_count; ++k) {
        if (family == "nowalls") {
          write_room_file(generate_nowalls(gen_n), gen_out, nowalls_name(gen_n));
          break;
        }
        if (family == "uniform") {
          write_room_file(generate_uniform_walls(gen_n, gen_t), gen_out,
                          uniform_walls_name(gen_n, gen_t));
          break;
        }
        WallSpec spec;
        spec.n = gen_n;
        spec.length_blocks = gen_t;
        spec.walls = gen_w;
        spec.seed = gen_seed + k;
        write_room_file(generate_random_walls(spec), gen_out,
                        random_walls_name(spec, static_cast<int>(spec.seed)));
      }
    } else if (*solve) {
      const Room room = load_room(room_path);
      RunSpec spec;
      spec.settings = parse_settings(setting);
      spec.method = parse_method(method);
      spec.time_limit_s = time_limit;
      spec.seed = seed;
      spec.runs = runs;
      spec.verbose = verbose;
      const auto outcome = run_instance(fs::path(room_path).stem().string(), room, spec);
      write_csv_header(std::cout);
      write_csv_row(outcome.row, std::cout);
      const std::string layout_file =
          out_path.empty() ? fs::path(room_path).replace_extension(".layout").string() : out_path;
      Output layout_out(layout_file);
      write_layout(outcome.configs, outcome.layout.selected, layout_out.stream());
    } else if (*render) {
      const Room room = load_room(room_path);
      const auto configs = enumerate_configurations(room);
      std::ifstream in(layout_path);
      if (!in) throw std::runtime_error("cannot open layout file '" + layout_path + "'");
      const auto selected = read_layout(in, configs);
      Output svg(out_path);
      render_svg(room, configs, selected, svg.stream());
    } else if (*tables) {
      Output csv(out_path);
      write_csv_header(csv.stream());
      for (const auto& row : reproduce_tables(n_max, time_limit)) write_csv_row(row, csv.stream());
    } else if (*lp || *graph) {
      const Room room = load_room(room_path);
      const auto configs = enumerate_configurations(room);
      const auto g = build_conflict_graph(room, configs, parse_settings(setting));
      Output out(out_path);
      if (*lp)
        export_lp(g, out.stream());
      else
        write_graph(g, out.stream());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
