#include "holoproj/poincare.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace holoproj {

namespace {

using Cplx = std::complex<double>;

// a d - b c = 1 for coprime (c, d)
std::pair<long, long> complete_to_unimodular(long c, long d) {
  // extended gcd on (d, c)
  long r0 = d, r1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    std::swap(r0 -= q * r1, r1);
    std::swap(s0 -= q * s1, s1);
    std::swap(t0 -= q * t1, t1);
  }
  // r0 = gcd = s0 * d + t0 * c; want a d - b c = 1
  if (r0 == -1) {
    s0 = -s0;
    t0 = -t0;
  }
  return {s0, -t0};  // a = s0, b = -t0
}

double lambda_min_Q(const Cplx& z) {
  // |c z + d|^2 = (c,d) Q (c,d)' with Q = [[|z|^2, x], [x, 1]]
  double x = z.real(), y = z.imag();
  double tr = x * x + y * y + 1.0, det = y * y;
  return (tr - std::sqrt(tr * tr - 4.0 * det)) / 2.0;
}

double lambda_max_Q(const Cplx& z) {
  double x = z.real(), y = z.imag();
  double tr = x * x + y * y + 1.0, det = y * y;
  return (tr + std::sqrt(tr * tr - 4.0 * det)) / 2.0;
}

double tail_bound(const Cplx& z, double sigma, long kappa, unsigned N) {
  double pexp = sigma + double(kappa) / 2.0;
  double y = z.imag();
  if (2.0 * pexp <= 2.0) throw std::domain_error("outside the convergence region");
  double lam = lambda_min_Q(z);
  double front;
  if (sigma >= 0) {
    front = std::pow(y, sigma) * std::pow(lam, -pexp);
  } else {
    // bound Im(gamma z)^sigma through the largest eigenvalue instead
    double lmax = lambda_max_Q(z);
    front = std::pow(y, sigma) * std::pow(2.0 * lmax, -sigma) * std::pow(lam, -double(kappa) / 2.0);
  }
  // sum over max(|c|, |d|) = M > N of 8 M (lam M^2)^{-p} <= integral comparison
  double expo = 2.0 - 2.0 * pexp;
  return front * 8.0 * std::pow(double(N), expo) / (2.0 * pexp - 2.0);
}

}  // namespace

PoincareValue genus1_poincare(Cplx z, const Genus1Params& p) {
  if (z.imag() <= 0) throw std::domain_error("z must lie in the upper half plane");
  if (p.tau < 1) throw std::domain_error("tau must be a positive integer");
  if (p.truncation < 1) throw std::domain_error("truncation must be at least one");
  double sigma = p.s.real();
  if (2.0 * sigma + double(p.kappa) <= 2.0)
    throw std::domain_error("outside the convergence region");
  const double tau = double(p.tau);
  const long N = long(p.truncation);
  auto term_of = [&](long c, long d) -> Cplx {
    auto [a, b] = complete_to_unimodular(c, d);
    Cplx den = double(c) * z + double(d);
    Cplx gz = (double(a) * z + double(b)) / den;
    Cplx expo = Cplx(0, 2.0 * M_PI * tau) * gz;
    Cplx ims = std::pow(Cplx(gz.imag(), 0), p.s);
    return std::exp(expo) * ims * std::pow(den, -double(p.kappa));
  };
  // one representative per coset of the translations-with-center subgroup:
  // c = 0 contributes only (0, 1)
  std::vector<Cplx> blocks(size_t(N) + 1, Cplx(0));
  blocks[0] = term_of(0, 1);
  unsigned long nterms = 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : nterms) if (p.parallel)
#endif
  for (long c = 1; c <= N; ++c) {
    Cplx acc = 0;
    for (long d = -N; d <= N; ++d) {
      if (std::gcd(c, std::abs(d)) != 1) continue;
      acc += term_of(c, d);
      ++nterms;
    }
    blocks[size_t(c)] = acc;
  }
  Cplx total = 0;
  for (auto& b : blocks) total += b;  // fixed blocking, deterministic order
  return {total, tail_bound(z, sigma, p.kappa, p.truncation), nterms};
}

ModularityResidual modularity_residual(const std::array<long, 4>& g, Cplx z,
                                       const Genus1Params& p) {
  if (g[0] * g[3] - g[1] * g[2] != 1)
    throw std::invalid_argument("matrix must have determinant one");
  Cplx den = double(g[2]) * z + double(g[3]);
  Cplx gz = (double(g[0]) * z + double(g[1])) / den;
  PoincareValue at_z = genus1_poincare(z, p);
  PoincareValue at_gz = genus1_poincare(gz, p);
  Cplx pulled = at_gz.value * std::pow(den, -double(p.kappa));
  double residual = std::abs(pulled - at_z.value);
  // |j|^{-kappa} <= lambda_min^{-kappa/2} at (c,d); bound the transported tail
  double jfac = std::pow(std::abs(den), -double(p.kappa));
  return {residual, at_z.tail_bound + jfac * at_gz.tail_bound};
}

}  // namespace holoproj
