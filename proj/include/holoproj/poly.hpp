#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "holoproj/rational.hpp"

namespace holoproj {

// Fixed variable universe with a fixed order; the order is the monomial
// (pure lexicographic) order everywhere, which keeps printed forms stable.
enum Var : unsigned {
  VX11, VX12, VX22,       // x entries (real part of z)
  VY11, VY12, VY22,       // y entries (imaginary part of z)
  VT11, VT12, VT22,       // tau entries
  VJ11, VJ12, VJ21, VJ22, // entries of the automorphy matrix J(g)
  VS1, VS2,               // seed exponents
  VU, VV,                 // spectral variables
  VKAPPA,                 // weight
  VL1, VL2,               // infinitesimal character coordinates
  VS,                     // genus-one series variable
  VT,                     // line parameter
  VB11, VB22,             // Cartan generators (images in U(h))
  kNumVars
};

const char* var_name(Var v);

using VarMask = std::uint32_t;
constexpr VarMask mask_of(Var v) { return VarMask{1} << v; }
constexpr VarMask kAllVars = (VarMask{1} << kNumVars) - 1;

struct variable_set_mismatch : std::runtime_error {
  explicit variable_set_mismatch(const std::string& w) : std::runtime_error(w) {}
};
struct exponent_overflow : std::runtime_error {
  explicit exponent_overflow(const std::string& w) : std::runtime_error(w) {}
};

struct Monomial {
  std::array<std::uint8_t, kNumVars> e{};

  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  unsigned deg(Var v) const { return e[v]; }
  unsigned total_degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (unsigned k = 0; k < kNumVars; ++k) {
      unsigned s = unsigned(e[k]) + unsigned(o.e[k]);
      if (s > 255) throw exponent_overflow("monomial exponent overflow");
      r.e[k] = std::uint8_t(s);
    }
    return r;
  }
  VarMask used() const {
    VarMask m = 0;
    for (unsigned k = 0; k < kNumVars; ++k)
      if (e[k]) m |= (VarMask{1} << k);
    return m;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const { return e < o.e; }
  // lex order, leading variable first; map sorted descending so the leading
  // term is first
  bool lex_less(const Monomial& o) const { return e < o.e; }
};

struct MonomialDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return b.lex_less(a); }
};

// Sparse multivariate polynomial over Q(i)[pi], canonical by construction.
class Poly {
 public:
  using TermMap = std::map<Monomial, RingElem, MonomialDesc>;

  Poly() : mask_(kAllVars) {}
  explicit Poly(VarMask mask) : mask_(mask) {}
  Poly(long n) : mask_(kAllVars) { add_term(Monomial{}, RingElem(n)); }
  Poly(const RingElem& c) : mask_(kAllVars) { add_term(Monomial{}, c); }

  static Poly var(Var v, VarMask mask = kAllVars);
  static Poly constant(const RingElem& c, VarMask mask = kAllVars);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  RingElem constant_term() const;
  size_t num_terms() const { return terms_.size(); }
  unsigned degree(Var v) const;
  unsigned total_degree() const;
  VarMask mask() const { return mask_; }
  VarMask used_vars() const;
  bool uses_any(VarMask m) const { return (used_vars() & m) != 0; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const RingElem& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned n) const;
  Poly derivative(Var v) const;

  // Simultaneous substitution; unbound variables stay.
  Poly substitute(const std::map<Var, Poly>& bindings) const;

  // Exact division; nullopt when the division leaves a remainder.
  std::optional<Poly> div_exact(const Poly& divisor) const;

  // Evaluation when every used variable is bound to a RingElem.
  RingElem eval(const std::map<Var, RingElem>& point) const;

  const TermMap& terms() const { return terms_; }
  void add_term(const Monomial& m, const RingElem& c);

  std::string str() const;

 private:
  static VarMask join_masks(const Poly& a, const Poly& b);
  VarMask mask_;
  TermMap terms_;
};

Poly operator*(const RingElem& c, const Poly& p);

// Convenience builders.
inline Poly PV(Var v) { return Poly::var(v); }
inline Poly PC(long n) { return Poly(n); }
inline Poly PQ(long num, long den) { return Poly(RingElem(rat_of(num, den))); }
inline Poly PPi() { return Poly(RingElem::pi()); }
inline Poly PI_() { return Poly(RingElem::i()); }

}  // namespace holoproj
