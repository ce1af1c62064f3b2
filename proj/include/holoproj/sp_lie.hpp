#pragma once

#include <map>
#include <string>
#include <vector>

#include "holoproj/rational.hpp"

namespace holoproj {

// Basis of sp_m(C): (E+)_{kl}, (E-)_{kl} (k <= l) and B_{kl} (all k,l).
enum class GenKind : std::uint8_t { Eplus, Eminus, B };

struct BasisIndex {
  GenKind kind;
  std::uint8_t k, l;  // 1-based; k <= l for Eplus/Eminus

  bool operator==(const BasisIndex& o) const {
    return kind == o.kind && k == o.k && l == o.l;
  }
  bool operator<(const BasisIndex& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (k != o.k) return k < o.k;
    return l < o.l;
  }
  std::string str() const;
};

inline BasisIndex EP(unsigned k, unsigned l) {
  if (k > l) std::swap(k, l);
  return {GenKind::Eplus, std::uint8_t(k), std::uint8_t(l)};
}
inline BasisIndex EM(unsigned k, unsigned l) {
  if (k > l) std::swap(k, l);
  return {GenKind::Eminus, std::uint8_t(k), std::uint8_t(l)};
}
inline BasisIndex BB(unsigned k, unsigned l) {
  return {GenKind::B, std::uint8_t(k), std::uint8_t(l)};
}

// Dense small matrix over Gaussian rationals.
class MatC {
 public:
  MatC() : n_(0) {}
  explicit MatC(unsigned n) : n_(n), a_(size_t(n) * n) {}
  unsigned dim() const { return n_; }
  GaussRat& at(unsigned i, unsigned j) { return a_[size_t(i) * n_ + j]; }
  const GaussRat& at(unsigned i, unsigned j) const { return a_[size_t(i) * n_ + j]; }
  MatC operator*(const MatC& o) const;
  MatC operator-(const MatC& o) const;
  MatC operator+(const MatC& o) const;
  bool is_zero() const;
  GaussRat trace() const;
  bool operator==(const MatC& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  unsigned n_;
  std::vector<GaussRat> a_;
};

// Matrix realization of sp_m(C) with brackets computed from it.
class SpLie {
 public:
  explicit SpLie(unsigned m);

  unsigned m() const { return m_; }
  const std::vector<BasisIndex>& basis() const { return basis_; }
  unsigned dim() const { return unsigned(basis_.size()); }
  unsigned index_of(const BasisIndex& b) const;

  MatC realize(const BasisIndex& b) const;

  // g'W + Wg == 0, membership in the matrix realization
  bool in_symplectic(const MatC& g) const;

  // Expansion of a matrix in the basis; throws if the matrix is outside the span.
  std::vector<GaussRat> expand(const MatC& g) const;

  // [a, b] expanded in the basis.
  std::map<BasisIndex, GaussRat> bracket(const BasisIndex& a, const BasisIndex& b) const;

  // B(g,h) = (1/2) trace(g h)
  GaussRat bilinear(const BasisIndex& a, const BasisIndex& b) const;

  // Dual basis with respect to the bilinear form, computed from the Gram
  // matrix (not hardcoded). Each dual is a combination; for this basis it is
  // always a single scaled element.
  std::map<BasisIndex, GaussRat> dual(const BasisIndex& a) const;

  // root of a basis vector with respect to the Cartan (B_11,...,B_mm);
  // throws unless the element is a simultaneous eigenvector.
  std::vector<Rat> root_of(const BasisIndex& b) const;

 private:
  void build_expander();
  unsigned m_;
  std::vector<BasisIndex> basis_;
  std::vector<MatC> realized_;
  // row-reduced data for expansion
  std::vector<std::vector<GaussRat>> rref_;
  std::vector<int> pivot_col_;
  std::vector<std::vector<GaussRat>> gram_inv_;
};

}  // namespace holoproj
