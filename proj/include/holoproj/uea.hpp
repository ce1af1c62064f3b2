#pragma once

#include <map>
#include <memory>
#include <vector>

#include "holoproj/poly.hpp"
#include "holoproj/sp_lie.hpp"

namespace holoproj {

using Word = std::vector<BasisIndex>;

// Universal enveloping algebra of sp_m(C) in PBW normal form.
//
// Canonical letter order: negative-root generators first (all (E+)_{kl},
// then B_{kl} with k > l), Cartan generators B_{kk} in the middle, then
// positive-root generators (B_{kl} with k < l, then (E-)_{kl}). With the
// positive system whose root spaces lie in the span of the upper-triangular
// B's and p^-, a normal word is Cartan-only exactly when it projects to
// U(h) under the Harish-Chandra decomposition.
class UEA {
 public:
  explicit UEA(unsigned m);

  const SpLie& lie() const { return lie_; }
  unsigned rank_of(const BasisIndex& b) const;

  class Elem {
   public:
    Elem() = default;
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Poly>& terms() const { return terms_; }
    Poly coeff(const Word& w) const;
    unsigned degree() const;
    std::string str() const;
    bool operator==(const Elem& o) const { return terms_ == o.terms_; }
    bool operator!=(const Elem& o) const { return !(*this == o); }

   private:
    friend class UEA;
    void add(const Word& w, const Poly& c);
    std::map<Word, Poly> terms_;
  };

  Elem zero() const { return Elem(); }
  Elem one() const;
  Elem letter(const BasisIndex& b) const;

  // PBW normal form of coeff * (w_1 ... w_n); the only entry point that
  // rewrites, everything else goes through it.
  Elem normal_form(const Word& w, const Poly& coeff) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, const Poly& c) const;
  Elem commutator(const Elem& a, const Elem& b) const;

  // D_r = sum trace(X_{i_1}...X_{i_r}) X*_{i_1}...X*_{i_r} over the basis.
  Elem casimir(unsigned r) const;
  // Same construction from an arbitrary basis given by an invertible
  // rational change of basis (duals recomputed from the Gram matrix).
  Elem casimir_from_basis(unsigned r, const std::vector<std::vector<Rat>>& change) const;

  Elem C1() const;  // (1/2) D_2
  Elem C2() const;  // (1/2) D_4

  // Center elements D+(u), D-(v) as polynomial combinations of C1, C2.
  Elem center_plus() const;
  Elem center_minus() const;

  struct IdentityReport {
    bool equal;
    Elem difference;
  };
  IdentityReport verify_identity(const Elem& lhs, const Elem& rhs) const;

  // --- formal matrix calculus over U(g) ---
  using MatU = std::vector<std::vector<Elem>>;
  MatU mat_Eplus() const;
  MatU mat_Eminus() const;
  MatU mat_B() const;
  MatU mat_Bstar() const;
  MatU mat_mul(const MatU& a, const MatU& b) const;
  Elem mat_trace(const MatU& a) const;
  Elem trace_prod(const std::vector<MatU>& factors) const;

 private:
  Elem nf_word(const Word& w) const;  // memoized, coefficient 1
  SpLie lie_;
  std::vector<BasisIndex> order_;             // letters in canonical order
  std::map<BasisIndex, unsigned> rank_;
  mutable std::map<Word, Elem> nf_cache_;
};

}  // namespace holoproj
