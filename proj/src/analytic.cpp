#include "lqu/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lqu/errors.hpp"

namespace lqu::analytic {

namespace {

void require_unit(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::ParamOutOfRange, std::string(name) + " = " + std::to_string(p) + " not in [0, 1]");
  }
}

void require_kay(double gamma) {
  if (!(gamma >= 2.0) || !std::isfinite(gamma)) {
    throw Error(ErrorKind::ParamOutOfRange, "gamma = " + std::to_string(gamma) + " < 2");
  }
}

}  // namespace

std::optional<AnalyticFamily> analytic_family(Family f) noexcept {
  switch (f) {
    case Family::Ghz3: return AnalyticFamily::Ghz3;
    case Family::W3: return AnalyticFamily::W3;
    case Family::Kay: return AnalyticFamily::Kay;
    case Family::W4: return AnalyticFamily::W4;
    case Family::Ghz4:
    case Family::Dicke24:
    case Family::Singlet4:
    case Family::Cluster4:
    case Family::Chi4: return AnalyticFamily::Ghz4Class;
    case Family::Random: return std::nullopt;
  }
  return std::nullopt;
}

double lqu_ghz3(double alpha) {
  require_unit(alpha, "alpha");
  return 1.0 - (3.0 * alpha + std::sqrt(alpha * (8.0 - 7.0 * alpha))) / 4.0;
}

W3Spectrum w3_eigenvalues(double beta) {
  require_unit(beta, "beta");
  const double root = std::sqrt(beta * (8.0 - 7.0 * beta));
  return {(3.0 * beta + root) / 4.0, (1.0 + 6.0 * beta + 2.0 * root) / 9.0};
}

double lqu_w3(double beta) {
  const auto [w1, w3] = w3_eigenvalues(beta);
  return 1.0 - std::max(w1, w3);
}

KaySpectrum kay_eigenvalues(double gamma) {
  require_kay(gamma);
  const double g1 = gamma + 1.0;
  const double k1 = 0.25 * std::sqrt((gamma + 2.0) / g1) *
                    (3.0 * std::sqrt((gamma - 2.0) / g1) + std::sqrt((gamma + 6.0) / g1));
  const double k3 = (3.0 * gamma + 2.0 + std::sqrt((gamma - 2.0) * (gamma + 6.0))) / (4.0 * g1);
  return {k1, k3};
}

double lqu_kay(double gamma) {
  require_kay(gamma);
  // (2 + g - sqrt((g-2)(g+6))) / (4(1+g)), with the numerator rationalized:
  // (2+g)^2 - (g-2)(g+6) = 16. Stays accurate for large gamma.
  const double root = std::sqrt((gamma - 2.0) * (gamma + 6.0));
  return 4.0 / ((1.0 + gamma) * (2.0 + gamma + root));
}

double lqu_ghz4_class(double eta) {
  require_unit(eta, "eta");
  return 1.0 - (7.0 * eta + std::sqrt(eta * (16.0 - 15.0 * eta))) / 8.0;
}

double lqu_w4(double eta) {
  require_unit(eta, "eta");
  return 1.0 - (8.0 + 21.0 * eta + 3.0 * std::sqrt(eta * (16.0 - 15.0 * eta))) / 32.0;
}

double lqu(AnalyticFamily family, double param) {
  switch (family) {
    case AnalyticFamily::Ghz3: return lqu_ghz3(param);
    case AnalyticFamily::W3: return lqu_w3(param);
    case AnalyticFamily::Kay: return lqu_kay(param);
    case AnalyticFamily::Ghz4Class: return lqu_ghz4_class(param);
    case AnalyticFamily::W4: return lqu_w4(param);
  }
  throw Error(ErrorKind::UnknownFamily, "analytic family");
}

}  // namespace lqu::analytic
