#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "holoproj/quadrature.hpp"
#include "holoproj/rational.hpp"

namespace holoproj {

using Cplx = std::complex<double>;

// symmetric m x m, integral diagonal, half-integral off-diagonal
class HalfIntegralMatrix {
 public:
  HalfIntegralMatrix(unsigned m, std::vector<Rat> entries);  // row-major full matrix
  static HalfIntegralMatrix identity(unsigned m);

  unsigned m() const { return m_; }
  const Rat& at(unsigned i, unsigned j) const { return e_[i * m_ + j]; }
  double at_d(unsigned i, unsigned j) const { return at(i, j).get_d(); }
  bool positive_definite() const;  // leading principal minors > 0
  double det_d() const;
  std::string str() const;

 private:
  unsigned m_;
  std::vector<Rat> e_;
};

struct HolomorphicDatum {
  Cplx a;  // A_tau(y) = a * exp(-2 pi tr(tau y))
};
struct SampledDatum {
  // scattered samples of A_tau over the cone, upper-triangle coordinates
  std::vector<std::pair<std::vector<double>, Cplx>> points;
};
using DatumFn = std::function<Cplx(const std::vector<double>&)>;  // y upper-triangle

struct FourierDatum {
  HalfIntegralMatrix tau;
  std::variant<HolomorphicDatum, SampledDatum, DatumFn> data;
  bool bounded_growth_asserted = true;
};

struct ProjectionResult {
  Cplx a;
  double error_estimate = 0;
  unsigned nodes = 0;
  std::vector<std::string> notes;
};

// holomorphic-projection coefficient
//   a(tau) = c(m,kappa)^{-1} det(tau)^{kappa-(m+1)/2}
//            int_Y A_tau(y) e^{-2 pi tr(tau y)} det(y)^{kappa-(m+1)} dy,
//   c(m,kappa) = (4 pi)^{m((m+1)/2-kappa)} Gamma_m(kappa-(m+1)/2)
ProjectionResult sturm_coefficient(unsigned m, long kappa, const FourierDatum& datum,
                                   const QuadratureSpec& spec = {});

}  // namespace holoproj
