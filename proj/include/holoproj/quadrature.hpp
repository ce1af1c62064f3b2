#pragma once

#include <vector>

#include "holoproj/poly.hpp"

namespace holoproj {

struct QuadRule {
  std::vector<double> nodes, weights;
};

// Gauss-Laguerre for int_0^inf t^alpha e^{-t} f(t) dt
QuadRule gauss_laguerre(unsigned n, double alpha = 0.0);
// Gauss-Hermite for int_R e^{-x^2} f(x) dx
QuadRule gauss_hermite(unsigned n);

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  unsigned node_budget = 2'000'000;
  double truncation_radius = 0.0;  // only meaningful for sampled data
  bool parallel = false;           // cells run under OpenMP, merged in fixed order
};

// Jacobian determinant of the Cholesky parametrization y = L L' of the SPD
// cone, as an exact polynomial in the lower-triangle entries (computed, not
// hardcoded). Variables: VY11 <- l11, VY12 <- l21, VY22 <- l22 for m = 2.
Poly cholesky_jacobian(unsigned m);

}  // namespace holoproj
