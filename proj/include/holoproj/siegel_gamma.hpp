#pragma once

#include <optional>
#include <string>

#include "holoproj/quadrature.hpp"
#include "holoproj/rational.hpp"

namespace holoproj {

// Gamma function of level m: pi^{m(m-1)/4} prod_{nu=0}^{m-1} Gamma(s - nu/2).

struct GammaValue {
  bool exact = false;     // rational multiple of a power of sqrt(pi)
  Rat coef;               // meaningful when exact
  long sqrt_pi_power = 0; // value = coef * sqrt(pi)^power when exact
  double value = 0.0;     // always set (unless a pole was hit)
  std::string str() const;
};

// product formula; exact for rational s with all factors at positive
// half-integral arguments, floating point otherwise; throws on a pole
GammaValue gamma_m_product(unsigned m, const Rat& s);
double gamma_m_product(unsigned m, double s);

// Euler-integral evaluation over the SPD cone in Cholesky coordinates,
// valid for Re s > (m-1)/2; adaptive tensor Gauss quadrature
struct EulerGammaResult {
  double value;
  double error_estimate;
  unsigned nodes;
};
EulerGammaResult gamma_m_euler(unsigned m, double s, const QuadratureSpec& spec = {});

}  // namespace holoproj
