#pragma once

#include <string>
#include <vector>

namespace holoproj {

// Trace/determinant estimates for SPD matrices, checked with the constants
// from their derivations: trace(S)^m > m! det(S), and
// min-eig(S) trace(Y) <= trace(S Y) <= trace(S) trace(Y).
struct InequalityReport {
  bool spd_inputs = false;
  bool power_bound = false;     // trace(S)^m > m! det(S)
  bool lower_bound = false;     // m1 trace(Y) <= trace(SY), m1 = least eigenvalue
  bool upper_bound = false;     // trace(SY) <= m2 trace(Y), m2 = trace(S)
  double m1 = 0, m2 = 0;
  bool all() const { return spd_inputs && power_bound && lower_bound && upper_bound; }
};

InequalityReport matrix_inequalities(const std::vector<double>& S, const std::vector<double>& Y,
                                     unsigned m);

}  // namespace holoproj
