#pragma once

#include <vector>

#include "holoproj/uea.hpp"

namespace holoproj {

// Harish-Chandra homomorphism gamma = tau_+ o p_+ for the Cartan spanned by
// the diagonal B's, with the positive system whose root spaces lie in the
// upper-triangular B's and p^-.  CartanPoly lives in Poly over {B11, B22}
// (plus whatever parameter variables the input carries).
class HarishChandra {
 public:
  explicit HarishChandra(const UEA& uea);

  // half the sum of positive roots, computed from the chosen positive system
  const std::vector<Rat>& delta() const { return delta_; }

  // projection to U(h): keeps exactly the Cartan-only normal words
  Poly p_plus(const UEA::Elem& x) const;
  // rho-shift B_jj -> B_jj - delta_j, extended multiplicatively
  Poly tau_plus(const Poly& cartan) const;
  Poly gamma(const UEA::Elem& x) const;

  // evaluation of gamma(x) at Lambda (exact polynomials allowed)
  Poly eval_inf_char(const Poly& lambda1, const Poly& lambda2, const UEA::Elem& x) const;

  struct FactorizationReport {
    bool plus_ok = false;   // gamma(D+(u)) == (L1^2-u^2)(L2^2-u^2)
    bool minus_ok = false;  // gamma(D-(v)) == ((L1+L2)^2-v^2)((L1-L2)^2-v^2)
    Poly gamma_plus, gamma_minus;
  };
  FactorizationReport factorization_check() const;

  // Weyl group of C_2 on gamma-images: sign changes and coordinate swap.
  bool weyl_invariant(const Poly& cartan_poly) const;

  // Common zeros of {Lambda(C1), Lambda(C2)} by exact resultant elimination.
  // Returns the full list of (L1, L2) rational solutions.
  std::vector<std::pair<Rat, Rat>> common_zeros_C1_C2() const;

 private:
  Var cartan_var(unsigned j) const;  // 1-based
  const UEA& uea_;
  std::vector<Rat> delta_;
};

// Sylvester resultant of p, q with respect to var (exact, Poly coefficients).
Poly resultant(const Poly& p, const Poly& q, Var var);

// Rational roots of a univariate polynomial (exact, by the rational root test).
std::vector<Rat> rational_roots(const Poly& p, Var var);

}  // namespace holoproj
