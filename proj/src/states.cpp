#include "lqu/states.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "lqu/errors.hpp"
#include "lqu/rng.hpp"

namespace lqu {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int n_qubits;  // 0 for random
};

constexpr std::array kFamilies{
    FamilyInfo{Family::Ghz3, "ghz3", 3},         FamilyInfo{Family::W3, "w3", 3},
    FamilyInfo{Family::Kay, "kay", 3},           FamilyInfo{Family::Ghz4, "ghz4", 4},
    FamilyInfo{Family::W4, "w4", 4},             FamilyInfo{Family::Dicke24, "dicke24", 4},
    FamilyInfo{Family::Singlet4, "singlet4", 4}, FamilyInfo{Family::Cluster4, "cluster4", 4},
    FamilyInfo{Family::Chi4, "chi4", 4},         FamilyInfo{Family::Random, "random", 0},
};

const FamilyInfo& info(Family f) {
  for (const auto& entry : kFamilies) {
    if (entry.family == f) return entry;
  }
  throw Error(ErrorKind::UnknownFamily, "unregistered family");
}

std::size_t basis_index(std::string_view bits) {
  std::size_t idx = 0;
  for (char b : bits) idx = (idx << 1) | static_cast<std::size_t>(b == '1');
  return idx;
}

PureState from_kets(int n_qubits, std::initializer_list<std::pair<std::string_view, double>> kets) {
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  for (const auto& [bits, coeff] : kets) amps[basis_index(bits)] += coeff;
  return PureState(n_qubits, std::move(amps));
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (const auto& entry : kFamilies) {
    if (entry.family == f) return entry.name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& entry : kFamilies) {
    if (entry.name == name) return entry.family;
  }
  throw Error(ErrorKind::UnknownFamily, "'" + std::string(name) + "'");
}

bool is_pure_family(Family f) noexcept { return f != Family::Kay && f != Family::Random; }

std::optional<int> family_qubits(Family f) noexcept {
  if (f == Family::Random) return std::nullopt;
  return info(f).n_qubits;
}

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > 30 || amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw Error(ErrorKind::DimensionMismatch, "amplitude vector length " +
                                                  std::to_string(amplitudes_.size()) + " for " +
                                                  std::to_string(n_qubits) + " qubits");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw Error(ErrorKind::InvalidState, "amplitude vector has zero or non-finite norm");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amplitudes_) a *= inv;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os.precision(6);
  switch (kind) {
    case Kind::Dimension: os << "DimensionViolation: dimension " << magnitude << " is not 2^N"; break;
    case Kind::NonFinite: os << "NonFiniteViolation: " << magnitude << " non-finite entries"; break;
    case Kind::Hermiticity: os << "HermiticityViolation: max |m - m^dagger| = " << magnitude; break;
    case Kind::Trace: os << "TraceViolation: |Tr - 1| = " << magnitude; break;
    case Kind::Psd: os << "PsdViolation: smallest eigenvalue " << magnitude; break;
  }
  return os.str();
}

std::vector<Violation> validate(const ComplexMatrix& m) {
  std::vector<Violation> out;
  const std::size_t dim = m.dim();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    out.push_back({Violation::Kind::Dimension, static_cast<double>(dim)});
    return out;
  }
  std::size_t bad = 0;
  for (const auto& z : m.entries()) bad += !(std::isfinite(z.real()) && std::isfinite(z.imag()));
  if (bad > 0) {
    out.push_back({Violation::Kind::NonFinite, static_cast<double>(bad)});
    return out;
  }
  const double herm = m.hermiticity_defect();
  if (herm > kStateHermitianTol) out.push_back({Violation::Kind::Hermiticity, herm});
  const double trace_err = std::abs(m.trace().real() - 1.0);
  if (trace_err > kStateTraceTol) out.push_back({Violation::Kind::Trace, trace_err});
  if (herm <= kStateHermitianTol) {
    const double smallest = hermitian_eig(m, kStateHermitianTol).values.front();
    if (smallest < -kStatePsdTol) out.push_back({Violation::Kind::Psd, smallest});
  }
  return out;
}

std::vector<Violation> validate(const DensityMatrix& rho) { return validate(rho.matrix()); }

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
  const auto violations = validate(m);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v.describe();
    throw Error(ErrorKind::InvalidState, msg);
  }
  int n = 0;
  while ((std::size_t{1} << n) < m.dim()) ++n;
  return DensityMatrix(n, std::move(m));
}

PureState pure_state(Family family, int n_qubits) {
  if (!is_pure_family(family)) {
    throw Error(ErrorKind::UnknownFamily, std::string(family_name(family)) + " is not a pure family");
  }
  if (n_qubits != info(family).n_qubits) {
    throw Error(ErrorKind::DimensionMismatch, std::string(family_name(family)) + " has " +
                                                  std::to_string(info(family).n_qubits) +
                                                  " qubits, not " + std::to_string(n_qubits));
  }
  const double r2 = std::sqrt(2.0);
  switch (family) {
    case Family::Ghz3: return from_kets(3, {{"000", 1}, {"111", 1}});
    case Family::W3: return from_kets(3, {{"001", 1}, {"010", 1}, {"100", 1}});
    case Family::Ghz4: return from_kets(4, {{"0000", 1}, {"1111", 1}});
    case Family::W4: return from_kets(4, {{"0001", 1}, {"0010", 1}, {"0100", 1}, {"1000", 1}});
    case Family::Dicke24:
      return from_kets(4, {{"0011", 1}, {"1100", 1}, {"0101", 1}, {"0110", 1}, {"1001", 1}, {"1010", 1}});
    case Family::Singlet4:
      return from_kets(4, {{"0011", 1}, {"1100", 1}, {"0101", -0.5}, {"0110", -0.5}, {"1001", -0.5},
                           {"1010", -0.5}});
    case Family::Cluster4: return from_kets(4, {{"0000", 1}, {"0011", 1}, {"1100", 1}, {"1111", -1}});
    case Family::Chi4:
      return from_kets(4, {{"1111", r2}, {"0001", 1}, {"0010", 1}, {"0100", 1}, {"1000", 1}});
    default: break;
  }
  throw Error(ErrorKind::UnknownFamily, std::string(family_name(family)));
}

PureState pure_state(Family family) {
  if (!is_pure_family(family)) {
    throw Error(ErrorKind::UnknownFamily, std::string(family_name(family)) + " is not a pure family");
  }
  return pure_state(family, info(family).n_qubits);
}

DensityMatrix mix_white_noise(const PureState& psi, double noise) {
  if (!(noise >= 0.0 && noise <= 1.0)) {
    throw Error(ErrorKind::NoiseOutOfRange, "noise " + std::to_string(noise) + " not in [0, 1]");
  }
  ComplexMatrix m = psi.projector() * (1.0 - noise);
  const double diag = noise / static_cast<double>(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) += diag;
  return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix kay_state(double gamma) {
  if (!std::isfinite(gamma)) throw Error(ErrorKind::GammaOutOfRange, "gamma is not finite");
  ComplexMatrix m(8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = gamma;
  m(0, 0) += 4.0;
  m(7, 7) += 4.0;
  constexpr std::array<double, 8> anti{2, 2, -2, 2, 2, -2, 2, 2};
  for (std::size_t i = 0; i < 8; ++i) m(i, 7 - i) = anti[i];
  m *= 1.0 / (8.0 + 8.0 * gamma);

  for (const auto& v : validate(m)) {
    throw Error(ErrorKind::GammaOutOfRange,
                "gamma " + std::to_string(gamma) + " gives an invalid state (" + v.describe() + ")");
  }
  return DensityMatrix::from_matrix(std::move(m));
}

PureState random_pure(int n_qubits, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw Error(ErrorKind::DimensionMismatch, "n_qubits " + std::to_string(n_qubits));
  }
  GaussianSource gauss(seed);
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  for (auto& a : amps) {
    const double re = gauss.normal();
    const double im = gauss.normal();
    a = Complex(re, im);
  }
  return PureState(n_qubits, std::move(amps));
}

ParamDomain param_domain(Family f) noexcept {
  if (f == Family::Kay) return {2.0, std::numeric_limits<double>::max()};
  return {0.0, 1.0};
}

DensityMatrix make_state(const StateSpec& spec) {
  if (!param_domain(spec.family).contains(spec.param)) {
    throw Error(spec.family == Family::Kay ? ErrorKind::GammaOutOfRange : ErrorKind::ParamOutOfRange,
                std::string(family_name(spec.family)) + " parameter " + std::to_string(spec.param));
  }
  switch (spec.family) {
    case Family::Kay: return kay_state(spec.param);
    case Family::Random: return mix_white_noise(random_pure(spec.n_qubits, spec.seed), spec.param);
    default: return mix_white_noise(pure_state(spec.family), spec.param);
  }
}

}  // namespace lqu
