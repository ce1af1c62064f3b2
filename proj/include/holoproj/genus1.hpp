#pragma once

#include <map>

#include "holoproj/poly.hpp"

namespace holoproj {

// Genus-one seed calculus in the classical coordinates (x, y, theta):
//   h(k) = c(tau, s) * y^{(kappa-1)/2 + s + k} * exp(2 pi i tau (x+iy)) * e^{i kappa theta}
// Terms are keyed by the integer offset k; coefficients stay free of y.
class Genus1Classical {
 public:
  explicit Genus1Classical(long kappa) : kappa_(kappa) {}

  using Expr = std::map<int, Poly>;

  Expr seed() const { return {{0, PC(1)}}; }

  Expr dx(const Expr& f) const;
  Expr dy(const Expr& f) const;
  Expr dtheta(const Expr& f) const;
  Expr mul_y(const Expr& f, int power) const;
  Expr add(const Expr& a, const Expr& b) const;
  Expr scale(const Expr& f, const Poly& c) const;

  // C1 = 4 y^2 (dx^2 + dy^2) - 4 y dx dtheta
  Expr casimir(const Expr& f) const;

 private:
  long kappa_;
};

}  // namespace holoproj
