// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//
//   acceptance [output-dir]
//
// The output directory receives the sweep CSVs checked by the last criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lqu/analytic.hpp"
#include "lqu/cli.hpp"
#include "lqu/errors.hpp"
#include "lqu/lqu.hpp"
#include "lqu/states.hpp"
#include "oracles.hpp"

using namespace lqu;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

constexpr std::array kGhz4Class{Family::Ghz4, Family::Dicke24, Family::Singlet4, Family::Cluster4, Family::Chi4};
const std::vector<double> kKayGammas{2.0, 2.5, 2.0 * std::sqrt(2.0), 3.0, 5.0, 10.0, 100.0};

double grid(int i, int n) { return static_cast<double>(i) / n; }

Outcome ghz3_oracle() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double alpha = grid(i, 100);
    const double numeric = lqu_bipartition(make_state({Family::Ghz3, alpha}), 0);
    worst = std::max(worst, std::abs(numeric - analytic::lqu_ghz3(alpha)));
  }
  const double elapsed = seconds_since(t0);
  const double at0 = lqu_bipartition(make_state({Family::Ghz3, 0.0}), 0);
  const double at1 = lqu_bipartition(make_state({Family::Ghz3, 1.0}), 0);
  out.require(worst <= 1e-8, "max deviation " + fmt(worst));
  out.require(std::abs(at0 - 1.0) <= 1e-9, "alpha=0 gives " + fmt(at0));
  out.require(std::abs(at1) <= 1e-9, "alpha=1 gives " + fmt(at1));
  out.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " s");
  if (out.pass) out.detail = "max dev " + fmt(worst) + ", " + fmt(elapsed) + " s";
  return out;
}

Outcome w3_oracle() {
  Outcome out;
  double worst = 0.0;
  double worst_spectrum = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double beta = grid(i, 100);
    const auto rho = make_state({Family::W3, beta});
    const RootedState rooted(rho);
    worst = std::max(worst, std::abs(rooted.lqu_bipartition(0) - analytic::lqu_w3(beta)));

    const auto lambdas = rooted.m_matrix(0).eigenvalues();
    const auto [w1, w3] = analytic::w3_eigenvalues(beta);
    worst_spectrum = std::max({worst_spectrum, std::abs(lambdas[0] - w1), std::abs(lambdas[1] - w1),
                               std::abs(lambdas[2] - w3)});
    out.require(w3 >= w1, "w3 < w1 at beta=" + fmt(beta));
    out.require(lambdas[2] >= lambdas[1], "numeric spectrum unsorted");
  }
  const double at0 = lqu_bipartition(make_state({Family::W3, 0.0}), 0);
  out.require(worst <= 1e-8, "max deviation " + fmt(worst));
  out.require(std::abs(at0 - 8.0 / 9.0) <= 1e-9, "beta=0 gives " + fmt(at0));
  out.require(worst_spectrum <= 1e-8, "spectrum deviates from (w1, w1, w3) by " + fmt(worst_spectrum));
  if (out.pass) out.detail = "max dev " + fmt(worst) + ", spectrum dev " + fmt(worst_spectrum);
  return out;
}

Outcome kay_oracle() {
  Outcome out;
  double worst = 0.0;
  for (double gamma : kKayGammas) {
    const double numeric = lqu_bipartition(kay_state(gamma), 0);
    worst = std::max(worst, std::abs(numeric - analytic::lqu_kay(gamma)));
  }
  const double at2 = lqu_bipartition(kay_state(2.0), 0);
  bool rejected = false;
  try {
    kay_state(1.9);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::GammaOutOfRange;
  }
  out.require(worst <= 1e-8, "max deviation " + fmt(worst));
  out.require(std::abs(at2 - 1.0 / 3.0) <= 1e-9, "gamma=2 gives " + fmt(at2));
  out.require(rejected, "gamma=1.9 was not rejected");
  if (out.pass) out.detail = "max dev " + fmt(worst);
  return out;
}

Outcome four_qubit_class() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  double worst_chain = 0.0;
  double worst_w4 = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double eta = grid(i, 10);
    std::vector<double> values;
    for (Family f : kGhz4Class) {
      values.push_back(lqu_bipartition(make_state({f, eta}), 0));
      worst = std::max(worst, std::abs(values.back() - analytic::lqu_ghz4_class(eta)));
    }
    worst_chain = std::max(worst_chain, spread(values));
    worst_w4 = std::max(worst_w4, std::abs(lqu_bipartition(make_state({Family::W4, eta}), 0) - analytic::lqu_w4(eta)));
  }
  const double w4_at0 = lqu_bipartition(make_state({Family::W4, 0.0}), 0);
  const double elapsed = seconds_since(t0);
  out.require(worst <= 1e-8, "GHZ4-class max deviation " + fmt(worst));
  out.require(worst_chain <= 1e-9, "five families disagree by " + fmt(worst_chain));
  out.require(worst_w4 <= 1e-8, "W4 max deviation " + fmt(worst_w4));
  out.require(std::abs(w4_at0 - 0.75) <= 1e-9, "W4 eta=0 gives " + fmt(w4_at0));
  out.require(elapsed < 30.0, "runtime " + fmt(elapsed) + " s");
  if (out.pass) {
    out.detail = "class dev " + fmt(worst) + ", chain spread " + fmt(worst_chain) + ", W4 dev " + fmt(worst_w4) +
                 ", " + fmt(elapsed) + " s";
  }
  return out;
}

Outcome bipartition_symmetry() {
  Outcome out;
  double worst = 0.0;
  auto check = [&](const DensityMatrix& rho, const std::string& label) {
    const double s = spread(lqu_all(rho).per_bipartition);
    worst = std::max(worst, s);
    out.require(s <= 1e-9, label + " spread " + fmt(s));
  };
  for (Family f : {Family::Ghz3, Family::W3}) {
    for (int i = 0; i <= 100; ++i) check(make_state({f, grid(i, 100)}), std::string(family_name(f)));
  }
  for (double gamma : kKayGammas) check(kay_state(gamma), "kay");
  for (Family f : {Family::Ghz4, Family::Dicke24, Family::Singlet4, Family::Cluster4, Family::Chi4, Family::W4}) {
    for (int i = 0; i <= 10; ++i) check(make_state({f, grid(i, 10)}), std::string(family_name(f)));
  }
  if (out.pass) out.detail = "max spread " + fmt(worst);
  return out;
}

Outcome variational_oracle() {
  Outcome out;
  double worst_below = 0.0;
  double worst_above = 0.0;
  bool asymmetric_seed = false;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rho = mix_white_noise(random_pure(3, seed), 0.2);
    const auto report = lqu_all(rho);
    for (int q = 0; q < 3; ++q) {
      const double exact = report.per_bipartition[q];
      const double sampled = lqu_variational(rho, q, 10000, 1000 + seed);
      worst_below = std::max(worst_below, exact - sampled);
      worst_above = std::max(worst_above, sampled - exact);
    }
    const auto& v = report.per_bipartition;
    const double gap = std::min({std::abs(v[0] - v[1]), std::abs(v[1] - v[2]), std::abs(v[0] - v[2])});
    if (gap > 0.01 && report.mean >= 0.0 && report.mean <= 1.0) asymmetric_seed = true;
  }
  out.require(worst_below <= 1e-9, "variational minimum below closed form by " + fmt(worst_below));
  out.require(worst_above <= 2e-3, "variational minimum above closed form by " + fmt(worst_above));
  out.require(asymmetric_seed, "no seed produced pairwise-distinct bipartition values");
  if (out.pass) out.detail = "max excess " + fmt(worst_above) + ", asymmetric seed found";
  return out;
}

Outcome invariance_suite() {
  Outcome out;
  std::mt19937_64 rng(2024);

  double worst_unitary = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + rep % 3;
    const auto rho = mix_white_noise(random_pure(n, 500 + rep), 0.3);
    ComplexMatrix u = lqu::testing::random_qubit_unitary(rng);
    for (int q = 1; q < n; ++q) u = kron(u, lqu::testing::random_qubit_unitary(rng));
    const auto rotated = DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
    const auto a = lqu_all(rho).per_bipartition;
    const auto b = lqu_all(rotated).per_bipartition;
    for (int q = 0; q < n; ++q) worst_unitary = std::max(worst_unitary, std::abs(a[q] - b[q]));
  }
  out.require(worst_unitary <= 1e-9, "local unitary invariance broken by " + fmt(worst_unitary));

  double worst_classical = 0.0;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + rep % 3;
    std::vector<double> p(std::size_t{1} << n);
    double total = 0.0;
    for (auto& x : p) total += (x = (rep % 4 == 0 && u01(rng) < 0.5) ? 0.0 : u01(rng));
    if (total == 0.0) p[0] = total = 1.0;
    for (auto& x : p) x /= total;
    for (double q : lqu_all(DensityMatrix::from_matrix(ComplexMatrix::diagonal(p))).per_bipartition) {
      worst_classical = std::max(worst_classical, std::abs(q));
    }
  }
  out.require(worst_classical <= 1e-9, "classical state has LQU " + fmt(worst_classical));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const double noise = static_cast<double>(seed % 10) / 10.0;
    const auto report = lqu_all(mix_white_noise(random_pure(n, seed), noise));
    for (double q : report.per_bipartition) out.require(q >= 0.0 && q <= 1.0, "LQU out of range: " + fmt(q));
    out.require(report.mean >= 0.0 && report.mean <= 1.0, "mean out of range");
  }

  double worst_sqrt = 0.0;
  for (std::size_t dim : {2u, 4u, 8u, 16u}) {
    for (int rep = 0; rep < 10; ++rep) {
      const ComplexMatrix m = lqu::testing::random_density(dim, rng);
      const ComplexMatrix root = matrix_sqrt_psd(m);
      worst_sqrt = std::max(worst_sqrt, lqu::testing::relative_frobenius(root * root, m));
    }
  }
  out.require(worst_sqrt <= 1e-9, "sqrt round trip error " + fmt(worst_sqrt));
  if (out.pass) {
    out.detail = "unitary " + fmt(worst_unitary) + ", classical " + fmt(worst_classical) + ", sqrt " + fmt(worst_sqrt);
  }
  return out;
}

std::vector<std::vector<double>> read_csv(const fs::path& path, std::string& header) {
  std::ifstream in(path);
  std::vector<std::vector<double>> rows;
  std::getline(in, header);
  for (std::string line; std::getline(in, line);) {
    std::vector<double> row;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) row.push_back(cell.empty() ? NAN : std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

Outcome figure_sweeps(const fs::path& dir) {
  Outcome out;
  fs::create_directories(dir);
  struct Sweep {
    const char* family;
    const char* from;
    const char* to;
    bool decreasing;
  };
  const std::array sweeps{Sweep{"ghz3", "0", "1", true}, Sweep{"w3", "0", "1", true}, Sweep{"kay", "2", "10", false}};
  for (const auto& s : sweeps) {
    const fs::path csv = dir / (std::string(s.family) + ".csv");
    fs::remove(csv);
    std::ostringstream sink_out, sink_err;
    const int code = cli::run({"sweep", "--family", s.family, "--from", s.from, "--to", s.to, "--steps", "101",
                               "--out", csv.string()},
                              sink_out, sink_err);
    out.require(code == 0 && fs::exists(csv), std::string(s.family) + " sweep failed: " + sink_err.str());
    if (code != 0) continue;
    std::string header;
    const auto rows = read_csv(csv, header);
    out.require(rows.size() == 101, std::string(s.family) + " row count");
    const std::size_t mean_col = rows.front().size() - 2;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (s.decreasing && i > 0) {
        out.require(rows[i][mean_col] < rows[i - 1][mean_col],
                    std::string(s.family) + " mean not strictly decreasing at row " + std::to_string(i));
      }
      if (!s.decreasing) out.require(rows[i][mean_col] > 0.0, "kay mean not positive");
    }
  }
  if (out.pass) out.detail = "CSVs in " + dir.string();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path out_dir = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "lqu_acceptance";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 GHZ3 closed form", ghz3_oracle},
      {"AC2 W3 closed form and spectrum", w3_oracle},
      {"AC3 Kay closed form", kay_oracle},
      {"AC4 four-qubit families", four_qubit_class},
      {"AC5 bipartition symmetry", bipartition_symmetry},
      {"AC6 variational oracle", variational_oracle},
      {"AC7 invariance suite", invariance_suite},
      {"AC8 figure sweeps", [&] { return figure_sweeps(out_dir); }},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
