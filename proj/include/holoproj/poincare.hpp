#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace holoproj {

// Truncated genus-one Poincare series of exponential type,
//   p_tau(z, s) = sum_{Gamma_inf \ SL2(Z)} e^{2 pi i tau gamma z} Im(gamma z)^s j(gamma, z)^{-kappa},
// summed over coprime (c, d) with 0 <= c <= N (one representative per coset),
// together with a rigorous tail bound by integral comparison.

struct PoincareValue {
  std::complex<double> value;
  double tail_bound;
  unsigned long terms;
};

struct Genus1Params {
  long kappa = 4;
  long tau = 1;
  std::complex<double> s = 0.0;
  unsigned truncation = 40;
  bool parallel = false;
};

// throws std::domain_error outside the convergence region Re(2s + kappa) > 2
PoincareValue genus1_poincare(std::complex<double> z, const Genus1Params& p);

// |j(g,z)^{-kappa} p(g z, s) - p(z, s)| together with the bound
// tail(z) + tail(g z) that the exact invariance allows at finite truncation
struct ModularityResidual {
  double residual;
  double allowance;
};
ModularityResidual modularity_residual(const std::array<long, 4>& gamma,
                                       std::complex<double> z, const Genus1Params& p);

}  // namespace holoproj
