#include "holoproj/rational.hpp"

#include <sstream>

namespace holoproj {

Rat rat_of(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

GaussRat GaussRat::inv() const {
  Rat n = re * re + im * im;
  if (n == 0) throw std::domain_error("division by zero Gaussian rational");
  return GaussRat(re / n, -im / n);
}

std::string GaussRat::str() const {
  if (im == 0) return rat_str(re);
  std::ostringstream os;
  if (re != 0) {
    os << re;
    os << (im > 0 ? "+" : "-");
    Rat a = abs(im);
    if (a != 1) os << a << "*";
    os << "i";
    return os.str();
  }
  if (im == 1) return "i";
  if (im == -1) return "-i";
  os << im << "*i";
  return os.str();
}

RingElem RingElem::operator-() const {
  RingElem r;
  for (auto& [d, c] : terms_) r.terms_[d] = -c;
  return r;
}

RingElem RingElem::operator+(const RingElem& o) const {
  RingElem r = *this;
  for (auto& [d, c] : o.terms_) {
    auto it = r.terms_.find(d);
    if (it == r.terms_.end()) {
      r.terms_[d] = c;
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  RingElem r;
  for (auto& [d1, c1] : terms_)
    for (auto& [d2, c2] : o.terms_) {
      GaussRat p = c1 * c2;
      if (p.is_zero()) continue;
      auto it = r.terms_.find(d1 + d2);
      if (it == r.terms_.end()) {
        r.terms_[d1 + d2] = p;
      } else {
        it->second = it->second + p;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

RingElem RingElem::div_monomial(const GaussRat& c, unsigned pideg) const {
  RingElem r;
  GaussRat ci = c.inv();
  for (auto& [d, x] : terms_) {
    if (d < pideg) throw std::domain_error("pi-degree too low for exact division");
    r.terms_[d - pideg] = x * ci;
  }
  return r;
}

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto& [d, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool needs_paren = (c.re != 0 && c.im != 0);
    if (needs_paren)
      os << "(" << c.str() << ")";
    else
      os << c.str();
    if (d > 0) {
      os << "*pi";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

}  // namespace holoproj
