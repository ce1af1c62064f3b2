#pragma once

#include <map>
#include <utility>
#include <vector>

#include "holoproj/poly.hpp"
#include "holoproj/uea.hpp"

namespace holoproj {

struct decomposition_error : std::runtime_error {
  explicit decomposition_error(const std::string& w) : std::runtime_error(w) {}
};

// One exponential-power term family:
//   coeff(x,y,tau,s,kappa,J) * T^(s1+t_off) * det(y)^(s2+d_off) * E^eps * j^(-kappa+j_off)
// with T = trace(tau y), E = exp(2 pi i trace(tau z)), j the automorphy factor.
struct TermKey {
  int t_off = 0, d_off = 0, j_off = 0;
  bool operator<(const TermKey& o) const {
    if (t_off != o.t_off) return t_off < o.t_off;
    if (d_off != o.d_off) return d_off < o.d_off;
    return j_off < o.j_off;
  }
  bool operator==(const TermKey& o) const {
    return t_off == o.t_off && d_off == o.d_off && j_off == o.j_off;
  }
};

class SiegelExpr {
 public:
  SiegelExpr() = default;
  explicit SiegelExpr(bool exp_marker) : exp_(exp_marker) {}

  bool exp_marker() const { return exp_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TermKey, Poly>& terms() const { return terms_; }
  Poly coeff(const TermKey& k) const;

  void add_term(const TermKey& k, const Poly& c);
  SiegelExpr operator+(const SiegelExpr& o) const;
  SiegelExpr operator-(const SiegelExpr& o) const;
  SiegelExpr operator*(const Poly& c) const;
  SiegelExpr& operator+=(const SiegelExpr& o) { return *this = *this + o; }
  SiegelExpr& operator-=(const SiegelExpr& o) { return *this = *this - o; }
  bool operator==(const SiegelExpr& o) const {
    return exp_ == o.exp_ && terms_ == o.terms_;
  }


  std::string str() const;

 private:
  bool exp_ = true;
  std::map<TermKey, Poly> terms_;
};

// Shifted-series decomposition: (ds1, ds2) -> coefficient free of x, y, J.
using ShiftKey = std::pair<int, int>;
struct ShiftDecomposition {
  std::map<ShiftKey, Poly> coeffs;
  Poly at(int ds1, int ds2) const;
  bool operator==(const ShiftDecomposition& o) const { return coeffs == o.coeffs; }
  std::string str() const;
};

inline ShiftKey uv_shift_of(const ShiftKey& s) {
  return {2 * s.second, 2 * s.first + 4 * s.second};
}

enum class DOp { Hol, Bar, YMat };
enum class Route { Transcribed, Engine };
enum class Exec { Serial, Parallel };
enum class CenterOp { C1, C2, Dplus, Dminus };

// Differential calculus on the Siegel halfspace of genus m (1 or 2) together
// with the right-action of the Lie algebra on weight-kappa seeds.  kappa is
// symbolic throughout; J entries are tracked as polynomial symbols and the
// conjugate entries are eliminated through Jbar = (J')^{-1} y^{-1}.
class SiegelCalculus {
 public:
  explicit SiegelCalculus(unsigned m);

  unsigned m() const { return m_; }

  // H = j^{-kappa} E T^{s1} det(y)^{s2}
  SiegelExpr seed() const;
  // plain seed translate H(s1+ds1, s2+ds2)
  SiegelExpr seed_shift(int ds1, int ds2) const;

  Var y_var(unsigned a, unsigned b) const;
  Var x_var(unsigned a, unsigned b) const;
  Var t_var(unsigned a, unsigned b) const;
  Var j_var(unsigned k, unsigned l) const;
  Poly tau(unsigned a, unsigned b) const { return PV(t_var(a, b)); }
  Poly y(unsigned a, unsigned b) const { return PV(y_var(a, b)); }
  Poly adj_y(unsigned a, unsigned b) const;
  const Poly& det_j() const { return detj_; }
  const Poly& jbar_num(unsigned k, unsigned l) const { return jbar_[k][l]; }

  SiegelExpr d_x(const SiegelExpr& f, unsigned a, unsigned b) const;
  SiegelExpr d_y(const SiegelExpr& f, unsigned a, unsigned b) const;
  SiegelExpr differentiate(const SiegelExpr& f, DOp op, unsigned a, unsigned b) const;

  // generator action by matrix entry; 1-based indices
  SiegelExpr act_entry(GenKind kind, unsigned a, unsigned b, const SiegelExpr& f) const;
  SiegelExpr act_word(const Word& w, const Poly& coeff, const SiegelExpr& f) const;
  SiegelExpr act_elem(const UEA::Elem& e, const SiegelExpr& f) const;

  // trace operators, both routes; results are weight-reduced
  SiegelExpr trace_op(unsigned order, const SiegelExpr& f, Route route,
                      Exec exec = Exec::Serial) const;

  // scalar-K-type casimir actions (kappa symbolic)
  SiegelExpr act_C1(const SiegelExpr& f, Route route) const;
  SiegelExpr act_C2(const SiegelExpr& f, Route route, Exec exec = Exec::Serial) const;

  // the u/v-parametrized center elements applied to the standard seed
  SiegelExpr act_center(CenterOp op, const SiegelExpr& f, Route route,
                        Exec exec = Exec::Serial) const;

  // collapse the automorphy bookkeeping; throws decomposition_error unless
  // the expression is j^{-kappa} times a J-free function
  SiegelExpr reduce_weight(const SiegelExpr& f) const;

  // expand into shifted seed translates of the standard seed
  ShiftDecomposition decompose(const SiegelExpr& f) const;

  // equality as functions: term maps are not unique (the symbolic powers
  // satisfy polynomial relations at genus one), so clear offsets and expand
  bool same_function(const SiegelExpr& a, const SiegelExpr& b) const;

  // convenience: full pipeline on the standard seed at numeric kappa
  ShiftDecomposition casimir_action(CenterOp op, long kappa, Route route,
                                    Exec exec = Exec::Serial) const;

  // all four decompositions sharing one order-4 evaluation
  struct Suite {
    ShiftDecomposition c1, c2, dplus, dminus;
  };
  // t4_of_seed, when given, supplies a precomputed order-4 trace of the seed
  Suite casimir_suite(long kappa, Route route, Exec exec = Exec::Serial,
                      const SiegelExpr* t4_of_seed = nullptr) const;

 private:
  SiegelExpr act_E(const SiegelExpr& f, unsigned a, unsigned b, bool plus) const;
  SiegelExpr act_B(const SiegelExpr& f, unsigned a, unsigned b) const;
  SiegelExpr trace_EE_engine(const SiegelExpr& f) const;
  SiegelExpr trace_E4_engine(const SiegelExpr& f, Exec exec) const;
  SiegelExpr trace_EE_display(const SiegelExpr& f) const;
  SiegelExpr trace_E4_display(const SiegelExpr& f) const;
  // transcription building blocks
  SiegelExpr op_D(const SiegelExpr& f) const;
  SiegelExpr tr_y_bar(const SiegelExpr& f) const;
  std::vector<std::vector<SiegelExpr>> bar_mat(const SiegelExpr& f) const;
  std::vector<std::vector<SiegelExpr>> hol_mat(const SiegelExpr& f) const;
  std::vector<std::vector<SiegelExpr>> ymy(const std::vector<std::vector<SiegelExpr>>& M) const;
  std::vector<std::vector<SiegelExpr>> ym(const std::vector<std::vector<SiegelExpr>>& M) const;

  unsigned m_;
  Poly detj_;
  std::vector<std::vector<Poly>> jbar_;      // numerators of (J')^{-1} y^{-1}
  std::vector<std::vector<Poly>> sandw_y_;   // Jbar' y Jbar numerators
};

}  // namespace holoproj
