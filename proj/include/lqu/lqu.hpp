#pragma once

// Local quantum uncertainty of N-qubit states: one value per bipartition
// "qubit k versus the rest", each equal to 1 minus the largest eigenvalue of
// the 3x3 correlation matrix
//   m_ij = Tr[ sqrt(rho) sigma_i^(k) sqrt(rho) sigma_j^(k) ],
// where sigma_i^(k) acts as a Pauli on qubit k and identity elsewhere.

#include <array>
#include <cstdint>
#include <vector>

#include "lqu/linalg.hpp"
#include "lqu/states.hpp"

namespace lqu {

enum class Pauli { X = 1, Y = 2, Z = 3 };

inline constexpr double kImaginaryResidueTol = 1e-10;
inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kRangeTol = 1e-9;

/// sigma on qubit `qubit` (big-endian), identity elsewhere. Throws IndexOutOfRange.
ComplexMatrix local_observable(int n_qubits, int qubit, Pauli pauli);
ComplexMatrix local_observable(int n_qubits, int qubit, int pauli_index);

/// Hermitian observable n.sigma on one qubit for a real 3-vector n.
ComplexMatrix local_observable(int n_qubits, int qubit, const std::array<double, 3>& direction);

/// Tr(rho k^2) - Tr(sqrt(rho) k sqrt(rho) k). Throws DimensionMismatch / NotHermitian.
double skew_information(const DensityMatrix& rho, const ComplexMatrix& k);

struct CorrelationMatrix3 {
  int measured_qubit = 0;
  std::array<std::array<double, 3>, 3> entries{};

  /// Ascending eigenvalues via the general Hermitian solver.
  std::array<double, 3> eigenvalues() const;
  /// n . M . n
  double quadratic_form(const std::array<double, 3>& n) const;
};

struct LquReport {
  std::vector<double> per_bipartition;
  double mean = 0.0;

  double min() const;
  double max() const;
};

/// The state together with its square root, computed once and shared by
/// every bipartition.
class RootedState {
 public:
  explicit RootedState(const DensityMatrix& rho);

  const DensityMatrix& state() const noexcept { return rho_; }
  const ComplexMatrix& sqrt_rho() const noexcept { return sqrt_rho_; }

  CorrelationMatrix3 m_matrix(int qubit) const;
  double lqu_bipartition(int qubit) const;
  double skew_information(const ComplexMatrix& k) const;

 private:
  DensityMatrix rho_;
  ComplexMatrix sqrt_rho_;
};

CorrelationMatrix3 m_matrix(const DensityMatrix& rho, int qubit);

/// 1 - lambda_max(M), clamped into [0, 1] when within 1e-9 outside;
/// larger excursions throw NumericalContractViolation.
double lqu_bipartition(const DensityMatrix& rho, int qubit);

/// All N bipartitions sharing one sqrt(rho); mean summed in ascending qubit order.
LquReport lqu_all(const DensityMatrix& rho);

/// Brute-force upper bound: the smallest skew information over `n_samples`
/// directions drawn uniformly on the unit sphere (normalized Gaussian triples).
double lqu_variational(const DensityMatrix& rho, int qubit, int n_samples, std::uint64_t seed);

}  // namespace lqu
