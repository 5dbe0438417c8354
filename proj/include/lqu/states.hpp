#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqu/linalg.hpp"

namespace lqu {

/// Computational-basis convention throughout: qubit 0 is the leftmost tensor
/// factor, i.e. the most significant bit of the basis index.
enum class Family {
  Ghz3,
  W3,
  Kay,
  Ghz4,
  W4,
  Dicke24,
  Singlet4,
  Cluster4,
  Chi4,
  Random,
};

std::string_view family_name(Family f) noexcept;
/// Throws UnknownFamily.
Family parse_family(std::string_view name);
bool is_pure_family(Family f) noexcept;
/// Qubit count of a named family; nullopt for Random.
std::optional<int> family_qubits(Family f) noexcept;

class PureState {
 public:
  /// Normalizes `amplitudes`; length must be 2^n_qubits and the norm nonzero.
  PureState(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  ComplexMatrix projector() const { return ComplexMatrix::outer(amplitudes_); }

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

inline constexpr double kStateHermitianTol = 1e-10;
inline constexpr double kStateTraceTol = 1e-10;
inline constexpr double kStatePsdTol = 1e-8;

struct Violation {
  enum class Kind { Dimension, Hermiticity, Trace, Psd, NonFinite };
  Kind kind;
  /// Measured magnitude: max |m - m^dagger|, |Tr - 1|, smallest eigenvalue, or offending dimension.
  double magnitude;

  std::string describe() const;
};

/// Checks dimension (power of two), finiteness, Hermiticity, unit trace and
/// PSD at the tolerances above. Empty result means a valid density matrix.
std::vector<Violation> validate(const ComplexMatrix& m);

class DensityMatrix {
 public:
  /// Throws InvalidState listing every violation.
  static DensityMatrix from_matrix(ComplexMatrix m);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  DensityMatrix(int n_qubits, ComplexMatrix m) : n_qubits_(n_qubits), matrix_(std::move(m)) {}

  int n_qubits_;
  ComplexMatrix matrix_;
};

std::vector<Violation> validate(const DensityMatrix& rho);

/// Amplitude patterns of the named pure families. Throws UnknownFamily for
/// Kay/Random, DimensionMismatch if n_qubits disagrees with the family.
PureState pure_state(Family family, int n_qubits);
PureState pure_state(Family family);

/// (1 - noise) |psi><psi| + noise I / 2^N. Throws NoiseOutOfRange outside [0, 1].
DensityMatrix mix_white_noise(const PureState& psi, double noise);

/// Three-qubit PPT family with prefactor 1/(8 + 8 gamma). Throws GammaOutOfRange
/// when the matrix fails the PSD check (gamma < 2).
DensityMatrix kay_state(double gamma);

/// Normalized i.i.d. standard complex Gaussian amplitudes (Haar measure).
PureState random_pure(int n_qubits, std::uint64_t seed);

struct StateSpec {
  Family family = Family::Ghz3;
  /// Noise fraction for mixed families, gamma for Kay.
  double param = 0.0;
  /// Random only.
  int n_qubits = 3;
  std::uint64_t seed = 0;
};

/// Inclusive valid parameter domain for a family: [0,1] except Kay, [2, inf).
struct ParamDomain {
  double lo;
  double hi;
  bool contains(double p) const noexcept { return p >= lo && p <= hi; }
};
ParamDomain param_domain(Family f) noexcept;

/// Builds the state a spec names. Throws ParamOutOfRange (or the family's own
/// range error) when param is outside the family's domain.
DensityMatrix make_state(const StateSpec& spec);

}  // namespace lqu
