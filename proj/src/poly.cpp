#include "holoproj/poly.hpp"

#include <sstream>

namespace holoproj {

const char* var_name(Var v) {
  static const char* names[kNumVars] = {
      "x11", "x12", "x22", "y11", "y12", "y22", "t11", "t12", "t22",
      "J11", "J12", "J21", "J22", "s1",  "s2",  "u",   "v",   "kappa",
      "L1",  "L2",  "s",   "t",   "B11", "B22"};
  return names[v];
}

Poly Poly::var(Var v, VarMask mask) {
  if (!(mask & mask_of(v))) throw variable_set_mismatch("variable outside registered set");
  Poly p(mask);
  Monomial m;
  m.e[v] = 1;
  p.add_term(m, RingElem(1));
  return p;
}

Poly Poly::constant(const RingElem& c, VarMask mask) {
  Poly p(mask);
  p.add_term(Monomial{}, c);
  return p;
}

RingElem Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? RingElem() : it->second;
}

unsigned Poly::degree(Var v) const {
  unsigned d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.deg(v));
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

VarMask Poly::used_vars() const {
  VarMask m = 0;
  for (auto& [mo, c] : terms_) m |= mo.used();
  return m;
}

void Poly::add_term(const Monomial& m, const RingElem& c) {
  if (c.is_zero()) return;
  if ((m.used() & ~mask_) != 0)
    throw variable_set_mismatch("monomial uses variable outside registered set");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VarMask Poly::join_masks(const Poly& a, const Poly& b) {
  if (a.mask_ == b.mask_) return a.mask_;
  // Constants and subexpressions promote into the wider set; genuinely
  // incompatible operands are an error per the ring contract.
  if ((b.used_vars() & ~a.mask_) == 0 && (a.used_vars() & ~b.mask_) == 0)
    return a.mask_ & b.mask_ ? (a.mask_ | b.mask_) : a.mask_;
  if ((b.used_vars() & ~a.mask_) == 0) return a.mask_;
  if ((a.used_vars() & ~b.mask_) == 0) return b.mask_;
  throw variable_set_mismatch("operands over incompatible variable sets");
}

Poly Poly::operator-() const {
  Poly r(mask_);
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(join_masks(*this, o));
  r.terms_ = terms_;
  for (auto& [m, c] : o.terms_) {
    auto it = r.terms_.find(m);
    if (it == r.terms_.end()) {
      r.terms_[m] = c;
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r(join_masks(*this, o));
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) {
      RingElem p = c1 * c2;
      if (p.is_zero()) continue;
      Monomial m = m1 * m2;
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_[m] = p;
      } else {
        it->second = it->second + p;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

Poly Poly::operator*(const RingElem& c) const {
  Poly r(mask_);
  if (c.is_zero()) return r;
  for (auto& [m, x] : terms_) r.terms_[m] = x * c;
  return r;
}

Poly operator*(const RingElem& c, const Poly& p) { return p * c; }

Poly Poly::pow(unsigned n) const {
  Poly r = Poly::constant(RingElem(1), mask_);
  Poly base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = (n >>= 1) ? base * base : base;
  }
  return r;
}

Poly Poly::derivative(Var v) const {
  Poly r(mask_);
  for (auto& [m, c] : terms_) {
    unsigned d = m.deg(v);
    if (!d) continue;
    Monomial mm = m;
    mm.e[v] -= 1;
    r.add_term(mm, c * RingElem(long(d)));
  }
  return r;
}

Poly Poly::substitute(const std::map<Var, Poly>& bindings) const {
  Poly r(mask_);
  bool first_mask = true;
  for (auto& [m, c] : terms_) {
    Poly term = Poly::constant(c, mask_);
    for (unsigned k = 0; k < kNumVars; ++k) {
      unsigned d = m.e[k];
      if (!d) continue;
      auto it = bindings.find(Var(k));
      if (it == bindings.end()) {
        Monomial mv;
        mv.e[k] = std::uint8_t(d);
        Poly pv(mask_);
        pv.add_term(mv, RingElem(1));
        term = term * pv;
      } else {
        term = term * it->second.pow(d);
      }
    }
    if (first_mask) {
      r = term;
      first_mask = false;
    } else {
      r = r + term;
    }
  }
  if (first_mask) return Poly(mask_);
  return r;
}

std::optional<Poly> Poly::div_exact(const Poly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  Poly rem = *this;
  Poly quot(join_masks(*this, divisor));
  const auto& dlead = *divisor.terms_.begin();  // leading term (lex-descending map)
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.begin();
    // monomial divisibility
    Monomial q;
    bool div = true;
    for (unsigned k = 0; k < kNumVars; ++k) {
      if (rlead.first.e[k] < dlead.first.e[k]) {
        div = false;
        break;
      }
      q.e[k] = std::uint8_t(rlead.first.e[k] - dlead.first.e[k]);
    }
    if (!div) return std::nullopt;
    // coefficient division in Q(i)[pi]: divisor leading coeff must divide
    RingElem dc = dlead.second;
    if (dc.terms().size() != 1) {
      // general RingElem division not needed here; restrict to monomial coeff
      return std::nullopt;
    }
    RingElem qc = rlead.second.div_monomial(dc.terms().begin()->second, dc.terms().begin()->first);
    Poly qterm(quot.mask_);
    qterm.add_term(q, qc);
    quot = quot + qterm;
    rem = rem - qterm * divisor;
  }
  return quot;
}

RingElem Poly::eval(const std::map<Var, RingElem>& point) const {
  RingElem acc;
  for (auto& [m, c] : terms_) {
    RingElem t = c;
    for (unsigned k = 0; k < kNumVars; ++k) {
      unsigned d = m.e[k];
      if (!d) continue;
      auto it = point.find(Var(k));
      if (it == point.end()) throw variable_set_mismatch("unbound variable in eval");
      for (unsigned j = 0; j < d; ++j) t = t * it->second;
    }
    acc = acc + t;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool cone = (c == RingElem(1));
    bool paren = c.terms().size() > 1 ||
                 (c.terms().size() == 1 && c.terms().begin()->second.re != 0 &&
                  c.terms().begin()->second.im != 0);
    if (m.is_one()) {
      os << (paren ? "(" + c.str() + ")" : c.str());
      continue;
    }
    if (!cone) os << (paren ? "(" + c.str() + ")" : c.str()) << "*";
    bool firstv = true;
    for (unsigned k = 0; k < kNumVars; ++k) {
      if (!m.e[k]) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << var_name(Var(k));
      if (m.e[k] > 1) os << "^" << unsigned(m.e[k]);
    }
  }
  return os.str();
}

}  // namespace holoproj
