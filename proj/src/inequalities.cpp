#include "holoproj/inequalities.hpp"

#include <Eigen/Dense>

namespace holoproj {

InequalityReport matrix_inequalities(const std::vector<double>& S, const std::vector<double>& Y,
                                     unsigned m) {
  if (S.size() != size_t(m) * m || Y.size() != size_t(m) * m)
    throw std::invalid_argument("matrix size mismatch");
  Eigen::MatrixXd Sm(m, m), Ym(m, m);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) {
      Sm(i, j) = S[i * m + j];
      Ym(i, j) = Y[i * m + j];
    }
  InequalityReport rep;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Sm), ey(Ym);
  rep.spd_inputs = es.eigenvalues().minCoeff() > 0 && ey.eigenvalues().minCoeff() > 0;
  if (!rep.spd_inputs) throw std::invalid_argument("inputs must be symmetric positive definite");
  double factorial = 1;
  for (unsigned k = 2; k <= m; ++k) factorial *= k;
  rep.power_bound = std::pow(Sm.trace(), double(m)) > factorial * Sm.determinant();
  rep.m1 = es.eigenvalues().minCoeff();
  rep.m2 = Sm.trace();
  double trSY = (Sm * Ym).trace(), trY = Ym.trace();
  rep.lower_bound = rep.m1 * trY <= trSY + 1e-12 * std::abs(trSY);
  rep.upper_bound = trSY <= rep.m2 * trY + 1e-12 * std::abs(trSY);
  return rep;
}

}  // namespace holoproj
