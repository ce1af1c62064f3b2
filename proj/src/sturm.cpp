#include "holoproj/sturm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "holoproj/siegel_gamma.hpp"

namespace holoproj {

HalfIntegralMatrix::HalfIntegralMatrix(unsigned m, std::vector<Rat> entries)
    : m_(m), e_(std::move(entries)) {
  if (e_.size() != size_t(m) * m) throw std::invalid_argument("matrix size mismatch");
  for (unsigned i = 0; i < m; ++i) {
    if (at(i, i).get_den() != 1)
      throw std::invalid_argument("diagonal entries must be integral");
    for (unsigned j = 0; j < i; ++j) {
      if (!(at(i, j) == at(j, i))) throw std::invalid_argument("matrix must be symmetric");
      if (at(i, j).get_den() > 2)
        throw std::invalid_argument("off-diagonal entries must be half-integral");
    }
  }
}

HalfIntegralMatrix HalfIntegralMatrix::identity(unsigned m) {
  std::vector<Rat> e(size_t(m) * m, Rat(0));
  for (unsigned i = 0; i < m; ++i) e[i * m + i] = 1;
  return HalfIntegralMatrix(m, std::move(e));
}

bool HalfIntegralMatrix::positive_definite() const {
  for (unsigned k = 1; k <= m_; ++k) {
    std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k));
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) M[i][j] = at(i, j);
    Rat det = 1;
    for (unsigned c = 0; c < k; ++c) {
      unsigned p = c;
      while (p < k && M[p][c] == 0) ++p;
      if (p == k) return false;
      if (p != c) {
        std::swap(M[p], M[c]);
        det = -det;
      }
      det *= M[c][c];
      for (unsigned r = c + 1; r < k; ++r) {
        Rat f = M[r][c] / M[c][c];
        for (unsigned cc = c; cc < k; ++cc) M[r][cc] -= f * M[c][cc];
      }
    }
    if (det <= 0) return false;
  }
  return true;
}

double HalfIntegralMatrix::det_d() const {
  if (m_ == 1) return at_d(0, 0);
  if (m_ == 2) return at_d(0, 0) * at_d(1, 1) - at_d(0, 1) * at_d(1, 0);
  throw std::domain_error("determinant wired for m <= 2");
}

std::string HalfIntegralMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < m_; ++i) {
    os << "[";
    for (unsigned j = 0; j < m_; ++j) os << at(i, j) << (j + 1 < m_ ? "," : "");
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

double datum_sup(const FourierDatum& datum) {
  if (!std::holds_alternative<SampledDatum>(datum.data)) return 0.0;
  double sup = 0.0;
  for (auto& [p, v] : std::get<SampledDatum>(datum.data).points)
    sup = std::max(sup, std::abs(v));
  return sup;
}

Cplx eval_datum(const FourierDatum& datum, const std::vector<double>& y_ut, double tr_tau_y,
                const QuadratureSpec& spec, bool& outside) {
  if (std::holds_alternative<HolomorphicDatum>(datum.data))
    return std::get<HolomorphicDatum>(datum.data).a * std::exp(-2.0 * M_PI * tr_tau_y);
  if (std::holds_alternative<DatumFn>(datum.data)) return std::get<DatumFn>(datum.data)(y_ut);
  // scattered samples: inverse-distance interpolation over the nearest four
  const auto& pts = std::get<SampledDatum>(datum.data).points;
  if (pts.empty()) return 0.0;
  std::vector<std::pair<double, Cplx>> best;
  best.reserve(pts.size());
  for (auto& [p, v] : pts) {
    double d2 = 0;
    for (size_t k = 0; k < p.size() && k < y_ut.size(); ++k) {
      double d = p[k] - y_ut[k];
      d2 += d * d;
    }
    best.emplace_back(d2, v);
  }
  size_t take = std::min<size_t>(4, best.size());
  std::partial_sort(best.begin(), best.begin() + long(take), best.end(),
                    [](auto& a, auto& b) { return a.first < b.first; });
  double r = spec.truncation_radius;
  if (r > 0 && best.front().first > r * r) {
    outside = true;
    return 0.0;
  }
  if (best.front().first < 1e-24) return best.front().second;
  Cplx num = 0;
  double den = 0;
  for (size_t k = 0; k < take; ++k) {
    double w = 1.0 / best[k].first;
    num += w * best[k].second;
    den += w;
  }
  return num / den;
}

}  // namespace

ProjectionResult sturm_coefficient(unsigned m, long kappa, const FourierDatum& datum,
                                   const QuadratureSpec& spec) {
  if (m < 1 || m > 2) throw std::domain_error("projection wired for m <= 2");
  if (kappa <= long(m))
    throw std::domain_error("weight must exceed the genus for the gamma factor to converge");
  if (datum.tau.m() != m) throw std::invalid_argument("tau has the wrong genus");
  if (!datum.tau.positive_definite())
    throw std::invalid_argument("tau must be positive definite");

  ProjectionResult out;
  if (!datum.bounded_growth_asserted)
    out.notes.push_back("bounded growth not asserted by the input");

  Eigen::MatrixXd T(m, m);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) T(i, j) = datum.tau.at_d(i, j);
  Eigen::LLT<Eigen::MatrixXd> llt(T);
  Eigen::MatrixXd C = llt.matrixL();
  Eigen::MatrixXd Cti = C.transpose().inverse();
  Eigen::MatrixXd Ci = C.inverse();

  // After w = C' y C the det(tau) powers of the definition cancel and
  //   a(tau) = c(m,kappa)^{-1} * int_{w>0} A(y(w)) e^{-2 pi tr w} det(w)^p dw,
  // p = kappa - (m+1).  Cholesky coordinates turn tr w into the Laguerre /
  // Hermite weights exactly.
  double p = double(kappa) - double(m + 1);
  GammaValue g = gamma_m_product(m, rat_of(2 * kappa - m - 1, 2));
  double c_mk = std::pow(4.0 * M_PI, double(m) * (double(m + 1) / 2.0 - double(kappa))) * g.value;

  auto y_ut_of_w = [&](const Eigen::MatrixXd& w) {
    Eigen::MatrixXd y = Cti * w * Ci;
    std::vector<double> ut;
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = i; j < m; ++j) ut.push_back(y(i, j));
    return ut;
  };

  bool have_prev = false;
  unsigned total_nodes = 0;
  bool outside_samples = false;
  double sup_sample = datum_sup(datum);
  for (unsigned n = 8; n <= 384; n += (n + 1) / 2) {
    Cplx J = 0;
    double skipped_mass = 0;  // |weight| of nodes outside a sampled truncation
    if (m == 1) {
      QuadRule lag = gauss_laguerre(n, p);  // det(w)^p folded into the weight
      for (unsigned i = 0; i < n; ++i) {
        double t = lag.nodes[i];
        Eigen::MatrixXd w(1, 1);
        w(0, 0) = t / (2.0 * M_PI);
        bool outside = false;
        Cplx A = eval_datum(datum, y_ut_of_w(w), w.trace(), spec, outside);
        double cell = lag.weights[i];
        if (outside) {
          skipped_mass += std::abs(cell) * sup_sample;
          outside_samples = true;
        }
        J += cell * A;
      }
      double norm = std::pow(2.0 * M_PI, -(p + 1.0));
      J *= norm;
      skipped_mass *= norm;
      total_nodes += n;
    } else {
      // det(w)^p = (t1 t2)^p / (4 pi^2)^p and the measure carries sqrt(t1);
      // both go into generalized Laguerre weights so the evaluated function
      // is as smooth as the datum
      QuadRule lag1 = gauss_laguerre(n, p + 0.5);
      QuadRule lag2 = gauss_laguerre(n, p);
      QuadRule her = gauss_hermite(n);
      std::vector<Cplx> blocks(n, Cplx(0));
      std::vector<double> skipped(n, 0.0);
      // constant left over after folding powers into the weights:
      // measure = sqrt(t1) / (8 pi^3), det(w)^p = (t1 t2)^p (4 pi^2)^{-p}
      const double front_const = std::pow(4.0 * M_PI * M_PI, -p) / (8.0 * M_PI * M_PI * M_PI);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (spec.parallel)
#endif
      for (long ii = 0; ii < long(n); ++ii) {
        unsigned i = unsigned(ii);
        Cplx acc = 0;
        bool outside = false;
        for (unsigned j = 0; j < n; ++j)
          for (unsigned k = 0; k < n; ++k) {
            double t1 = lag1.nodes[i], t2 = lag2.nodes[j], b = her.nodes[k];
            double l11 = std::sqrt(t1 / (2.0 * M_PI));
            double l22 = std::sqrt(t2 / (2.0 * M_PI));
            double l21 = b / std::sqrt(2.0 * M_PI);
            Eigen::MatrixXd w(2, 2);
            w(0, 0) = l11 * l11;
            w(0, 1) = l11 * l21;
            w(1, 0) = l11 * l21;
            w(1, 1) = l21 * l21 + l22 * l22;
            double cell = lag1.weights[i] * lag2.weights[j] * her.weights[k] * front_const;
            outside = false;
            Cplx A = eval_datum(datum, y_ut_of_w(w), w.trace(), spec, outside);
            if (outside) skipped[i] += std::abs(cell) * sup_sample;
            acc += cell * A;
          }
        blocks[i] = acc;
      }
      for (unsigned i = 0; i < n; ++i) {  // deterministic merge in node order
        J += blocks[i];
        skipped_mass += skipped[i];
      }
      if (skipped_mass > 0) outside_samples = true;
      total_nodes += n * n * n;
    }
    Cplx a = J / c_mk;
    if (have_prev) {
      double err = std::abs(a - out.a) + skipped_mass / std::abs(c_mk);
      out.a = a;
      out.error_estimate = err;
      out.nodes = total_nodes;
      if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(a))) break;
    } else {
      out.a = a;
      out.error_estimate = skipped_mass / std::abs(c_mk);
      out.nodes = total_nodes;
    }
    have_prev = true;
    if (total_nodes > spec.node_budget)
      throw std::runtime_error("projection quadrature exceeded the node budget");
  }
  if (outside_samples)
    out.notes.push_back("quadrature nodes outside the sampled truncation were taken as zero");
  return out;
}

}  // namespace holoproj
