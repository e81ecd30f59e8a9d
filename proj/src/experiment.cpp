#include "dining/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "dining/instance_gen.hpp"
#include "dining/solver.hpp"

namespace dining {
namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void require_feasible(const ConflictGraph& g, const Layout& layout) {
  if (!g.is_independent(layout.selected) || g.total_weight(layout.selected) != layout.value)
    throw std::logic_error("method returned an infeasible layout");
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::CloseCorner: return "close_corner";
    case Method::Random: return "random";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (auto m : {Method::Exact, Method::CloseCorner, Method::Random})
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

void write_csv_header(std::ostream& out) {
  out << "instance,setting,method,vars,edges,persons,dual,gap,time_s,status,rng\n";
}

void write_csv_row(const ExperimentRow& r, std::ostream& out) {
  const bool whole = r.persons == static_cast<double>(static_cast<long>(r.persons));
  out << r.instance << ',' << r.setting << ',' << r.method << ',' << r.vars << ',' << r.edges
      << ',' << (whole ? std::to_string(static_cast<long>(r.persons)) : fixed(r.persons, 1))
      << ',' << (r.dual ? fixed(*r.dual, 2) : "") << ','
      << (r.gap ? fixed(100.0 * *r.gap, 2) : "") << ','
      << fixed(r.time_s, 1) << ',' << r.status << ',' << r.rng << '\n';
}

RunOutcome run_instance(const std::string& name, const Room& room, const RunSpec& spec) {
  using Clock = std::chrono::steady_clock;
  if (spec.runs < 1) throw std::invalid_argument("runs must be at least 1");

  RunOutcome out;
  const auto start = Clock::now();
  out.configs = enumerate_configurations(room);
  const ConflictGraph g = build_conflict_graph(room, out.configs, spec.settings);

  ExperimentRow& row = out.row;
  row.instance = name;
  row.setting = settings_name(spec.settings);
  row.method = std::string(to_string(spec.method));
  row.vars = g.vertex_count();
  row.edges = static_cast<long>(g.edge_count());

  switch (spec.method) {
    case Method::Exact: {
      SolveOptions opt;
      opt.initial = close_corner(out.configs, g).selected;
      opt.verbose = spec.verbose;
      opt.log = &std::cerr;
      const SolveResult res = solve_exact(g, spec.time_limit_s, opt);
      out.layout = {res.selected, res.primal};
      require_feasible(g, out.layout);
      row.persons = static_cast<double>(res.primal);
      row.dual = res.dual;
      row.gap = res.gap;
      row.status = std::string(to_string(res.status));
      break;
    }
    case Method::CloseCorner: {
      out.layout = close_corner(out.configs, g);
      require_feasible(g, out.layout);
      row.persons = static_cast<double>(out.layout.value);
      row.status = "Heuristic";
      break;
    }
    case Method::Random: {
      double sum = 0;
      for (int r = 0; r < spec.runs; ++r) {
        Layout l = random_construct(out.configs, g, spec.seed + r);
        require_feasible(g, l);
        sum += static_cast<double>(l.value);
        if (r == 0) out.layout = std::move(l);
      }
      row.persons = sum / spec.runs;
      row.status = "Heuristic";
      row.rng = std::string(kRandomAlgorithm) + " seed=" + std::to_string(spec.seed) +
                " runs=" + std::to_string(spec.runs);
      break;
    }
  }
  row.time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

std::vector<ExperimentRow> reproduce_tables(int n_max, double time_limit_s) {
  if (n_max < 5 || n_max > 40) throw std::invalid_argument("n_max must be within 5..40");
  std::vector<ExperimentRow> rows;
  for (int n = 5; n <= n_max; n += 5) {
    const Room room = generate_nowalls(n);
    for (const auto& setting : {Settings::baseline(), Settings::sitting_sense()}) {
      for (auto method : {Method::Exact, Method::CloseCorner, Method::Random}) {
        RunSpec spec;
        spec.settings = setting;
        spec.method = method;
        spec.time_limit_s = time_limit_s;
        spec.seed = 1;
        spec.runs = method == Method::Random ? 5 : 1;
        rows.push_back(run_instance(nowalls_name(n), room, spec).row);
      }
    }
  }
  return rows;
}

void write_layout(std::span<const SittingConfiguration> configs, std::span<const int> selected,
                  std::ostream& out) {
  for (int id : selected) {
    const auto& c = configs[id];
    out << c.id << ' ' << to_string(c.kind) << ' ' << c.origin().row << ' ' << c.origin().col
        << ' ' << c.seats << '\n';
  }
}

std::vector<int> read_layout(std::istream& in, std::span<const SittingConfiguration> configs) {
  std::vector<int> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long id;
    std::string kind;
    int row, col, seats;
    if (!(ls >> id)) continue;
    if (!(ls >> kind >> row >> col >> seats)) throw ParseError(lineno, "malformed layout line");
    if (id < 0 || id >= static_cast<long>(configs.size()))
      throw ParseError(lineno, "unknown configuration id " + std::to_string(id));
    const auto& c = configs[static_cast<std::size_t>(id)];
    if (to_string(c.kind) != kind || c.origin().row != row || c.origin().col != col ||
        c.seats != seats)
      throw ParseError(lineno, "configuration " + std::to_string(id) + " does not match the room");
    ids.push_back(static_cast<int>(id));
  }
  return ids;
}

}  // namespace dining
