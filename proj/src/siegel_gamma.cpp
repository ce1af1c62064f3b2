#include "holoproj/siegel_gamma.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace holoproj {

std::string GammaValue::str() const {
  std::ostringstream os;
  if (!exact) {
    os << value;
    return os.str();
  }
  os << coef;
  if (sqrt_pi_power) {
    if (sqrt_pi_power % 2 == 0) {
      os << "*pi";
      if (sqrt_pi_power != 2) os << "^" << sqrt_pi_power / 2;
    } else {
      os << "*sqrt(pi)";
      if (sqrt_pi_power != 1) os << "^" << sqrt_pi_power;
    }
  }
  return os.str();
}

namespace {
// Gamma at a positive integer or half-integer, as coef * sqrt(pi)^p
bool exact_gamma(const Rat& s, Rat& coef, long& p) {
  if (s <= 0) return false;
  if (s.get_den() == 1) {
    mpz_class n = s.get_num();
    if (n > 40) return false;  // keep the exact path small
    Rat f = 1;
    for (mpz_class k = 1; k < n; ++k) f *= Rat(k);
    coef = f;
    p = 0;
    return true;
  }
  if (s.get_den() == 2) {
    // Gamma(1/2 + n) = (2n)! / (4^n n!) sqrt(pi)
    Rat n2 = s - rat_of(1, 2);
    if (n2.get_den() != 1 || n2 < 0 || n2 > 40) return false;
    long n = long(n2.get_num().get_si());
    Rat num = 1, den = 1;
    for (long k = 1; k <= 2 * n; ++k) num *= k;
    for (long k = 1; k <= n; ++k) den *= k;
    Rat four_n = 1;
    for (long k = 0; k < n; ++k) four_n *= 4;
    coef = num / (den * four_n);
    p = 1;
    return true;
  }
  return false;
}
}  // namespace

GammaValue gamma_m_product(unsigned m, const Rat& s) {
  GammaValue out;
  out.exact = true;
  out.coef = 1;
  out.sqrt_pi_power = long(m) * (long(m) - 1) / 2;  // pi^{m(m-1)/4}
  for (unsigned nu = 0; nu < m; ++nu) {
    Rat arg = s - rat_of(long(nu), 2);
    if (arg <= 0 && arg.get_den() == 1) throw std::domain_error("gamma factor at a pole");
    Rat c;
    long p;
    if (out.exact && exact_gamma(arg, c, p)) {
      out.coef *= c;
      out.sqrt_pi_power += p;
    } else {
      out.exact = false;
    }
  }
  double v = std::pow(M_PI, double(m) * (double(m) - 1) / 4.0);
  for (unsigned nu = 0; nu < m; ++nu) {
    double arg = s.get_d() - double(nu) / 2.0;
    if (arg <= 0 && std::abs(arg - std::round(arg)) < 1e-12)
      throw std::domain_error("gamma factor at a pole");
    v *= std::tgamma(arg);
  }
  out.value = v;
  if (out.exact) {
    double check = out.coef.get_d() * std::pow(std::sqrt(M_PI), double(out.sqrt_pi_power));
    out.value = check;
  }
  return out;
}

double gamma_m_product(unsigned m, double s) {
  double v = std::pow(M_PI, double(m) * (double(m) - 1) / 4.0);
  for (unsigned nu = 0; nu < m; ++nu) {
    double arg = s - double(nu) / 2.0;
    if (arg <= 0 && std::abs(arg - std::round(arg)) < 1e-12)
      throw std::domain_error("gamma factor at a pole");
    v *= std::tgamma(arg);
  }
  return v;
}

EulerGammaResult gamma_m_euler(unsigned m, double s, const QuadratureSpec& spec) {
  if (s <= (double(m) - 1) / 2.0)
    throw std::domain_error("Euler integral requires Re s > (m-1)/2");
  if (m > 2) throw std::domain_error("Euler integral wired for m <= 2");
  // y = L L', integrand e^{-tr y} det(y)^{s-(m+1)/2} with the computed
  // Jacobian; diagonal coordinates substituted t = l^2 (Laguerre weight),
  // off-diagonal Gauss-Hermite
  Poly jac = cholesky_jacobian(m);
  auto eval_jac = [&](double l11, double l21, double l22) {
    double acc = 0;
    for (auto& [mono, c] : jac.terms()) {
      double t = c.constant().re.get_d();
      for (unsigned k = 0; k < mono.e[VY11]; ++k) t *= l11;
      for (unsigned k = 0; k < mono.e[VY12]; ++k) t *= l21;
      for (unsigned k = 0; k < mono.e[VY22]; ++k) t *= l22;
      acc += t;
    }
    return acc;
  };
  double prev = 0;
  bool have_prev = false;
  unsigned total_nodes = 0;
  EulerGammaResult out{0, 0, 0};
  for (unsigned n = 8; n <= 256; n = n + n / 2) {
    QuadRule lag = gauss_laguerre(n);
    QuadRule lag_half = gauss_laguerre(n, 0.5);  // absorbs the Jacobian sqrt
    double value = 0;
    if (m == 1) {
      // int_0^inf e^{-y} y^{s-1} dy, y = l^2, dy = (jacobian) dl; with
      // t = l^2 this is the plain Laguerre integral of t^{s-1}
      for (unsigned i = 0; i < n; ++i) value += lag.weights[i] * std::pow(lag.nodes[i], s - 1.0);
      total_nodes += n;
    } else {
      QuadRule her = gauss_hermite(n);
      // t = l^2 on the two diagonal coordinates; dl = dt/(2 sqrt t)
      double p = s - 1.5;  // det(y)^{s-3/2} = (l11 l22)^{2s-3}
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
          for (unsigned k = 0; k < n; ++k) {
            double t1 = lag_half.nodes[i], t2 = lag.nodes[j], b = her.nodes[k];
            double l11 = std::sqrt(t1), l22 = std::sqrt(t2);
            // the l11 of the Jacobian pairs with dl11 = dt1/(2 sqrt t1) into
            // the alpha = 1/2 weight; evaluate the smooth remainder
            double f = std::pow(t1, p) * std::pow(t2, p) * eval_jac(l11, b, l22) /
                       (2.0 * std::sqrt(t1)) / (2.0 * l22) / std::sqrt(t1);
            value += lag_half.weights[i] * lag.weights[j] * her.weights[k] * f;
          }
      total_nodes += n * n * n;
    }
    if (have_prev) {
      double err = std::abs(value - prev);
      out.value = value;
      out.error_estimate = err;
      out.nodes = total_nodes;
      if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) return out;
    }
    prev = value;
    have_prev = true;
    if (total_nodes > spec.node_budget)
      throw std::runtime_error("quadrature did not converge within the node budget");
  }
  return out;
}

}  // namespace holoproj
