#ifndef DINING_EXPERIMENT_HPP
#define DINING_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dining/conflict.hpp"
#include "dining/heuristics.hpp"
#include "dining/room.hpp"
#include "dining/seating.hpp"

namespace dining {

enum class Method { Exact, CloseCorner, Random };

std::string_view to_string(Method m);
/// "exact", "close_corner" or "random"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view name);

/// One line of experiment output, mirroring the columns of the result tables.
struct ExperimentRow {
  std::string instance;
  std::string setting;
  std::string method;
  long vars = 0;
  long edges = 0;
  double persons = 0;
  /// Exact method only; the gap is a fraction, printed as a percentage.
  std::optional<double> dual;
  std::optional<double> gap;
  double time_s = 0;
  std::string status;
  std::string rng;
};

void write_csv_header(std::ostream& out);
void write_csv_row(const ExperimentRow& row, std::ostream& out);

struct RunSpec {
  Settings settings;
  Method method = Method::Exact;
  double time_limit_s = 60;
  std::uint64_t seed = 1;
  int runs = 1;
  bool verbose = false;
};

struct RunOutcome {
  ExperimentRow row;
  std::vector<SittingConfiguration> configs;
  /// For the random method with several runs: the first run's layout.
  Layout layout;
};

/// Enumerate, build the conflict graph, run the method, and re-check the
/// returned layout against the graph before reporting it. Throws
/// std::logic_error if a method ever returns an infeasible layout.
RunOutcome run_instance(const std::string& name, const Room& room, const RunSpec& spec);

/// Rows for every no-walls class n = 5, 10, ..., n_max, for settings
/// baseline and sittingsense, and methods exact, close_corner and random
/// (5 runs from seed 1), in that order.
std::vector<ExperimentRow> reproduce_tables(int n_max, double time_limit_s);

/// Layout sidecar: one `id kind row col seats` line per configuration.
void write_layout(std::span<const SittingConfiguration> configs, std::span<const int> selected,
                  std::ostream& out);
/// Returns configuration ids. Lines must name an existing configuration and
/// agree with its kind, anchor block and seats.
std::vector<int> read_layout(std::istream& in, std::span<const SittingConfiguration> configs);

}  // namespace dining

#endif  // DINING_EXPERIMENT_HPP
