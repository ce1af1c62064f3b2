#include "holoproj/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace holoproj {

namespace {
QuadRule golub_welsch(const std::vector<double>& alpha, const std::vector<double>& beta,
                      double mu0) {
  unsigned n = unsigned(alpha.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (unsigned i = 0; i < n; ++i) {
    J(i, i) = alpha[i];
    if (i + 1 < n) {
      double b = std::sqrt(beta[i + 1]);
      J(i, i + 1) = b;
      J(i + 1, i) = b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v0 * v0;
  }
  return r;
}
}  // namespace

QuadRule gauss_laguerre(unsigned n, double a) {
  std::vector<double> alpha(n), beta(n);
  for (unsigned k = 0; k < n; ++k) {
    alpha[k] = 2.0 * k + a + 1.0;
    beta[k] = double(k) * (double(k) + a);
  }
  return golub_welsch(alpha, beta, std::tgamma(a + 1.0));
}

QuadRule gauss_hermite(unsigned n) {
  std::vector<double> alpha(n, 0.0), beta(n);
  for (unsigned k = 0; k < n; ++k) beta[k] = double(k) / 2.0;
  return golub_welsch(alpha, beta, std::sqrt(M_PI));
}

Poly cholesky_jacobian(unsigned m) {
  // y = L L'; entries of y as polynomials in the l's, then the determinant of
  // the derivative matrix d(y_upper)/d(l_lower)
  if (m == 1) {
    // y11 = l11^2
    return PC(2) * PV(VY11);
  }
  if (m != 2) throw std::domain_error("cholesky_jacobian wired for m <= 2");
  Poly l11 = PV(VY11), l21 = PV(VY12), l22 = PV(VY22);
  Poly y11 = l11 * l11;
  Poly y12 = l11 * l21;
  Poly y22 = l21 * l21 + l22 * l22;
  Var ls[3] = {VY11, VY12, VY22};
  Poly ys[3] = {y11, y12, y22};
  Poly J[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) J[i][j] = ys[i].derivative(ls[j]);
  Poly det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
             J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
             J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
  return det;
}

}  // namespace holoproj
