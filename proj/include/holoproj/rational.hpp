#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace holoproj {

using Rat = mpq_class;

Rat rat_of(long num, long den = 1);
std::string rat_str(const Rat& q);

// Gaussian rational a + b*i, exact.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long n) : re(n), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussRat conj() const { return GaussRat(re, -im); }
  GaussRat inv() const;
  GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }
  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  std::string str() const;
};

// Element of Q(i)[pi]: pi is transcendental and never evaluated.
// Canonical: no zero coefficients stored.
class RingElem {
 public:
  RingElem() = default;
  RingElem(long n) { set(0, GaussRat(n)); }
  RingElem(const Rat& q) { set(0, GaussRat(q)); }
  RingElem(const GaussRat& g) { set(0, g); }

  static RingElem pi(unsigned deg = 1) {
    RingElem r;
    r.set(deg, GaussRat(1));
    return r;
  }
  static RingElem i() { return RingElem(GaussRat::i()); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  GaussRat coeff(unsigned pideg) const {
    auto it = terms_.find(pideg);
    return it == terms_.end() ? GaussRat() : it->second;
  }
  GaussRat constant() const { return coeff(0); }
  unsigned pi_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  RingElem operator-() const;
  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }
  bool operator==(const RingElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  // Division by a single pi-monomial c*pi^d (used when clearing powers).
  RingElem div_monomial(const GaussRat& c, unsigned pideg) const;

  const std::map<unsigned, GaussRat>& terms() const { return terms_; }
  std::string str() const;

 private:
  void set(unsigned deg, const GaussRat& c) {
    if (c.is_zero())
      terms_.erase(deg);
    else
      terms_[deg] = c;
  }
  std::map<unsigned, GaussRat> terms_;  // pi-degree -> coefficient
};

}  // namespace holoproj
