#pragma once

// Closed-form local quantum uncertainty for the white-noise mixed GHZ/W
// families and the Kay family. Used as oracles for the numeric pipeline.

#include <optional>

#include "lqu/states.hpp"

namespace lqu::analytic {

enum class AnalyticFamily { Ghz3, W3, Kay, Ghz4Class, W4 };

/// GHZ4, Dicke(2,4), four-qubit singlet, cluster and chi4 all share one formula.
std::optional<AnalyticFamily> analytic_family(Family f) noexcept;

/// Domain checks throw ParamOutOfRange.
double lqu_ghz3(double alpha);
double lqu_w3(double beta);
double lqu_kay(double gamma);
double lqu_ghz4_class(double eta);
double lqu_w4(double eta);

double lqu(AnalyticFamily family, double param);

/// Spectrum of the W3 correlation matrix: a doubly degenerate w1 and a single w3.
struct W3Spectrum {
  double w1;
  double w3;
};
W3Spectrum w3_eigenvalues(double beta);

/// Spectrum of the Kay correlation matrix: doubly degenerate k1 and single k3.
struct KaySpectrum {
  double k1;
  double k3;
};
KaySpectrum kay_eigenvalues(double gamma);

}  // namespace lqu::analytic
