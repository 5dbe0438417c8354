#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lqu/lqu.hpp"
#include "lqu/states.hpp"

namespace lqu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitNumerical = 3;

struct SweepConfig {
  StateSpec spec;
  double param_from = 0.0;
  double param_to = 1.0;
  int steps = 2;
  std::filesystem::path output_path;
};

/// 12 significant digits, printf %.12g.
std::string format_number(double x);

/// "q0: <v>" ... "mean: <v>", one line each.
std::string render_report(const LquReport& report);

/// Throws ParamOutOfRange when the config breaks its invariants.
void check_sweep_config(const SweepConfig& config);

/// The full CSV text: header `param,q0,...,q{N-1},mean,analytic` then one row
/// per step at param = from + i (to - from) / (steps - 1). LF line endings.
std::string sweep_csv(const SweepConfig& config);

int cmd_compute(const std::filesystem::path& input, std::ostream& out, std::ostream& err);
/// Writes the CSV only after every row has been computed; removes any
/// partial file on failure.
int cmd_sweep(const SweepConfig& config, std::ostream& err);
int cmd_random(int n_qubits, std::uint64_t seed, double pure_fraction,
               const std::optional<std::filesystem::path>& dump, std::ostream& out, std::ostream& err);

/// Full command line dispatch (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lqu::cli
