#include "lqu/lqu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lqu/errors.hpp"
#include "lqu/rng.hpp"

namespace lqu {

namespace {

void check_qubit(int n_qubits, int qubit) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw Error(ErrorKind::IndexOutOfRange,
                "qubit " + std::to_string(qubit) + " of " + std::to_string(n_qubits));
  }
}

ComplexMatrix embed(int n_qubits, int qubit, const ComplexMatrix& single) {
  check_qubit(n_qubits, qubit);
  const auto left = ComplexMatrix::identity(std::size_t{1} << qubit);
  const auto right = ComplexMatrix::identity(std::size_t{1} << (n_qubits - qubit - 1));
  return kron(kron(left, single), right);
}

double real_trace(Complex t, const char* what) {
  if (std::abs(t.imag()) > kImaginaryResidueTol) {
    throw Error(ErrorKind::NumericalContractViolation,
                std::string(what) + " has imaginary residue " + std::to_string(t.imag()));
  }
  return t.real();
}

double clamp_unit(double q) {
  if (q < -kRangeTol || q > 1.0 + kRangeTol) {
    throw Error(ErrorKind::NumericalContractViolation,
                "local quantum uncertainty " + std::to_string(q) + " outside [0, 1]");
  }
  return std::clamp(q, 0.0, 1.0);
}

}  // namespace

ComplexMatrix local_observable(int n_qubits, int qubit, Pauli pauli) {
  return embed(n_qubits, qubit, pauli::by_index(static_cast<int>(pauli)));
}

ComplexMatrix local_observable(int n_qubits, int qubit, int pauli_index) {
  return embed(n_qubits, qubit, pauli::by_index(pauli_index));
}

ComplexMatrix local_observable(int n_qubits, int qubit, const std::array<double, 3>& n) {
  const ComplexMatrix single = n[0] * pauli::x() + n[1] * pauli::y() + n[2] * pauli::z();
  return embed(n_qubits, qubit, single);
}

std::array<double, 3> CorrelationMatrix3::eigenvalues() const {
  ComplexMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = entries[i][j];
  }
  const auto eig = hermitian_eig(m, kSymmetryTol);
  return {eig.values[0], eig.values[1], eig.values[2]};
}

double CorrelationMatrix3::quadratic_form(const std::array<double, 3>& n) const {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) s += n[i] * entries[i][j] * n[j];
  }
  return s;
}

double LquReport::min() const {
  return per_bipartition.empty() ? 0.0
                                 : *std::min_element(per_bipartition.begin(), per_bipartition.end());
}

double LquReport::max() const {
  return per_bipartition.empty() ? 0.0
                                 : *std::max_element(per_bipartition.begin(), per_bipartition.end());
}

RootedState::RootedState(const DensityMatrix& rho)
    : rho_(rho), sqrt_rho_(matrix_sqrt_psd(rho.matrix())) {}

double RootedState::skew_information(const ComplexMatrix& k) const {
  if (k.dim() != rho_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "observable dimension " + std::to_string(k.dim()) +
                                                  " vs state " + std::to_string(rho_.dim()));
  }
  if (k.hermiticity_defect() > kDefaultHermitianTol) {
    throw Error(ErrorKind::NotHermitian, "observable is not Hermitian");
  }
  const double local = real_trace(trace_of_product(rho_.matrix(), k * k), "Tr(rho k^2)");
  const ComplexMatrix sk = sqrt_rho_ * k;
  const double overlap = real_trace(trace_of_product(sk, sk), "Tr(sqrt(rho) k sqrt(rho) k)");
  return local - overlap;
}

CorrelationMatrix3 RootedState::m_matrix(int qubit) const {
  check_qubit(rho_.n_qubits(), qubit);
  std::array<ComplexMatrix, 3> products;
  for (int i = 0; i < 3; ++i) {
    products[i] = sqrt_rho_ * local_observable(rho_.n_qubits(), qubit, i + 1);
  }
  CorrelationMatrix3 out;
  out.measured_qubit = qubit;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const double v = real_trace(trace_of_product(products[i], products[j]), "m_ij");
      out.entries[i][j] = v;
      out.entries[j][i] = v;
    }
  }
  return out;
}

double RootedState::lqu_bipartition(int qubit) const {
  const auto lambdas = m_matrix(qubit).eigenvalues();
  return clamp_unit(1.0 - lambdas[2]);
}

double skew_information(const DensityMatrix& rho, const ComplexMatrix& k) {
  if (k.dim() != rho.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "observable dimension " + std::to_string(k.dim()) +
                                                  " vs state " + std::to_string(rho.dim()));
  }
  return RootedState(rho).skew_information(k);
}

CorrelationMatrix3 m_matrix(const DensityMatrix& rho, int qubit) {
  check_qubit(rho.n_qubits(), qubit);
  return RootedState(rho).m_matrix(qubit);
}

double lqu_bipartition(const DensityMatrix& rho, int qubit) {
  check_qubit(rho.n_qubits(), qubit);
  return RootedState(rho).lqu_bipartition(qubit);
}

LquReport lqu_all(const DensityMatrix& rho) {
  const RootedState rooted(rho);
  LquReport report;
  report.per_bipartition.reserve(static_cast<std::size_t>(rho.n_qubits()));
  double sum = 0.0;
  for (int q = 0; q < rho.n_qubits(); ++q) {
    report.per_bipartition.push_back(rooted.lqu_bipartition(q));
    sum += report.per_bipartition.back();
  }
  report.mean = sum / rho.n_qubits();
  return report;
}

double lqu_variational(const DensityMatrix& rho, int qubit, int n_samples, std::uint64_t seed) {
  check_qubit(rho.n_qubits(), qubit);
  if (n_samples < 1) {
    throw Error(ErrorKind::ParamOutOfRange, "n_samples must be >= 1");
  }
  const RootedState rooted(rho);
  GaussianSource gauss(seed);
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < n_samples; ++s) {
    std::array<double, 3> n{};
    double norm = 0.0;
    do {
      for (auto& c : n) c = gauss.normal();
      norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    } while (norm == 0.0);
    for (auto& c : n) c /= norm;
    best = std::min(best, rooted.skew_information(local_observable(rho.n_qubits(), qubit, n)));
  }
  return best;
}

}  // namespace lqu
