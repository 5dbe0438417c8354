#include "lqu/errors.hpp"

namespace lqu {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::NoiseOutOfRange: return "NoiseOutOfRange";
    case ErrorKind::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::NumericalContractViolation: return "NumericalContractViolation";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace lqu
