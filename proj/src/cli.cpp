#include "lqu/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>

#include "lqu/analytic.hpp"
#include "lqu/density_io.hpp"
#include "lqu/errors.hpp"

namespace lqu::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NumericalContractViolation:
    case ErrorKind::NoConvergence:
    case ErrorKind::NotPositiveSemidefinite:
      return kExitNumerical;
    default:
      return kExitBadInput;
  }
}

int sweep_qubits(const StateSpec& spec) {
  return family_qubits(spec.family).value_or(spec.n_qubits);
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string render_report(const LquReport& report) {
  std::string s;
  for (std::size_t q = 0; q < report.per_bipartition.size(); ++q) {
    s += "q" + std::to_string(q) + ": " + format_number(report.per_bipartition[q]) + "\n";
  }
  s += "mean: " + format_number(report.mean) + "\n";
  return s;
}

void check_sweep_config(const SweepConfig& config) {
  const auto domain = param_domain(config.spec.family);
  if (config.steps < 2) throw Error(ErrorKind::ParamOutOfRange, "steps must be >= 2");
  if (!(config.param_from <= config.param_to)) {
    throw Error(ErrorKind::ParamOutOfRange, "--from must not exceed --to");
  }
  if (!domain.contains(config.param_from) || !domain.contains(config.param_to)) {
    throw Error(ErrorKind::ParamOutOfRange,
                "parameter range [" + format_number(config.param_from) + ", " +
                    format_number(config.param_to) + "] outside the domain of " +
                    std::string(family_name(config.spec.family)));
  }
  if (config.spec.family == Family::Random && (config.spec.n_qubits < 1 || config.spec.n_qubits > 10)) {
    throw Error(ErrorKind::ParamOutOfRange, "random sweeps need 1 <= qubits <= 10");
  }
}

std::string sweep_csv(const SweepConfig& config) {
  check_sweep_config(config);
  const int n = sweep_qubits(config.spec);
  const auto closed_form = analytic::analytic_family(config.spec.family);

  std::string csv = "param";
  for (int q = 0; q < n; ++q) csv += ",q" + std::to_string(q);
  csv += ",mean,analytic\n";

  const double span = config.param_to - config.param_from;
  for (int i = 0; i < config.steps; ++i) {
    double param = config.param_from + i * span / (config.steps - 1);
    if (i == config.steps - 1) param = config.param_to;
    StateSpec spec = config.spec;
    spec.param = param;
    const LquReport report = lqu_all(make_state(spec));

    csv += format_number(param);
    for (double v : report.per_bipartition) csv += "," + format_number(v);
    csv += "," + format_number(report.mean) + ",";
    if (closed_form) csv += format_number(analytic::lqu(*closed_form, param));
    csv += "\n";
  }
  return csv;
}

int cmd_compute(const std::filesystem::path& input, std::ostream& out, std::ostream& err) {
  try {
    const DensityMatrix rho = io::read_density_matrix(input);
    out << render_report(lqu_all(rho));
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << input.string() << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_sweep(const SweepConfig& config, std::ostream& err) {
  std::string csv;
  try {
    csv = sweep_csv(config);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  {
    std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
    if (file) file << csv;
    if (file && file.flush()) return kExitOk;
  }
  std::error_code ignored;
  std::filesystem::remove(config.output_path, ignored);
  err << "error: cannot write " << config.output_path.string() << "\n";
  return kExitBadInput;
}

int cmd_random(int n_qubits, std::uint64_t seed, double pure_fraction,
               const std::optional<std::filesystem::path>& dump, std::ostream& out, std::ostream& err) {
  try {
    if (!(pure_fraction >= 0.0 && pure_fraction <= 1.0)) {
      throw Error(ErrorKind::ParamOutOfRange, "--pure-fraction must lie in [0, 1]");
    }
    if (n_qubits < 1 || n_qubits > 10) {
      throw Error(ErrorKind::ParamOutOfRange, "--qubits must lie in [1, 10]");
    }
    const DensityMatrix rho = mix_white_noise(random_pure(n_qubits, seed), 1.0 - pure_fraction);
    out << render_report(lqu_all(rho));
    if (dump) io::write_density_matrix(*dump, rho);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local quantum uncertainty for N-qubit density matrices", "lqu"};
  app.require_subcommand(1);

  std::string input;
  auto* compute = app.add_subcommand("compute", "LQU of a density-matrix JSON file");
  compute->add_option("file", input, "density-matrix JSON")->required();

  std::string family;
  SweepConfig sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of LQU across a family parameter");
  sweep_cmd->add_option("--family", family, "ghz3, w3, kay, ghz4, w4, dicke24, singlet4, cluster4, chi4, random")
      ->required();
  sweep_cmd->add_option("--from", sweep.param_from, "first parameter value")->required();
  sweep_cmd->add_option("--to", sweep.param_to, "last parameter value")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "number of rows (>= 2)")->required();
  sweep_cmd->add_option("--out", sweep.output_path, "output CSV path")->required();
  sweep_cmd->add_option("--qubits", sweep.spec.n_qubits, "qubit count (random family)");
  sweep_cmd->add_option("--seed", sweep.spec.seed, "seed (random family)");

  int qubits = 3;
  std::uint64_t seed = 0;
  double pure_fraction = 0.8;
  std::string dump;
  auto* random_cmd = app.add_subcommand("random", "LQU of a seeded random pure state mixed with white noise");
  random_cmd->add_option("--qubits", qubits, "qubit count")->required();
  random_cmd->add_option("--seed", seed, "64-bit seed")->required();
  random_cmd->add_option("--pure-fraction", pure_fraction, "weight of the pure state; noise is 1 - P")
      ->required();
  random_cmd->add_option("--dump", dump, "write the density matrix JSON here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitBadInput;
  }

  if (*compute) return cmd_compute(input, out, err);
  if (*sweep_cmd) {
    try {
      sweep.spec.family = parse_family(family);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitBadInput;
    }
    return cmd_sweep(sweep, err);
  }
  std::optional<std::filesystem::path> dump_path;
  if (!dump.empty()) dump_path = dump;
  return cmd_random(qubits, seed, pure_fraction, dump_path, out, err);
}

}  // namespace lqu::cli
