#include "holoproj/siegel.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holoproj {

namespace {
constexpr VarMask kJMask = mask_of(VJ11) | mask_of(VJ12) | mask_of(VJ21) | mask_of(VJ22);
constexpr VarMask kXMask = mask_of(VX11) | mask_of(VX12) | mask_of(VX22);
constexpr VarMask kYMask = mask_of(VY11) | mask_of(VY12) | mask_of(VY22);

Poly two_pi_i() { return Poly(RingElem::pi() * RingElem(2) * RingElem::i()); }
Poly minus_two_pi() { return Poly(-(RingElem::pi() * RingElem(2))); }
long cmult(unsigned a, unsigned b) { return a == b ? 1 : 2; }
}  // namespace

Poly SiegelExpr::coeff(const TermKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Poly(long(0)) : it->second;
}

void SiegelExpr::add_term(const TermKey& k, const Poly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SiegelExpr SiegelExpr::operator+(const SiegelExpr& o) const {
  if (!o.terms_.empty() && !terms_.empty() && exp_ != o.exp_)
    throw decomposition_error("mixing exponential marker states");
  SiegelExpr r = *this;
  if (terms_.empty()) r.exp_ = o.exp_;
  for (auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

SiegelExpr SiegelExpr::operator-(const SiegelExpr& o) const {
  SiegelExpr neg = o * Poly(long(-1));
  return *this + neg;
}

SiegelExpr SiegelExpr::operator*(const Poly& c) const {
  SiegelExpr r(exp_);
  if (c.is_zero()) return r;
  for (auto& [k, x] : terms_) r.add_term(k, x * c);
  return r;
}

std::string SiegelExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[T^(s1" << (k.t_off >= 0 ? "+" : "") << k.t_off << ") det(y)^(s2"
       << (k.d_off >= 0 ? "+" : "") << k.d_off << ")";
    if (exp_) os << " E";
    if (k.j_off) os << " j^" << k.j_off;
    os << "] (" << c.str() << ")";
  }
  return os.str();
}

Poly ShiftDecomposition::at(int ds1, int ds2) const {
  auto it = coeffs.find({ds1, ds2});
  return it == coeffs.end() ? Poly(long(0)) : it->second;
}

std::string ShiftDecomposition::str() const {
  std::ostringstream os;
  for (auto& [k, c] : coeffs) {
    auto uv = uv_shift_of(k);
    os << "shift (" << k.first << "," << k.second << ") -> (u+" << uv.first << ", v+"
       << uv.second << "): " << c.str() << "\n";
  }
  return os.str();
}

SiegelCalculus::SiegelCalculus(unsigned m) : m_(m) {
  if (m < 1 || m > 2) throw std::domain_error("genus out of range");
  if (m == 1) {
    detj_ = PV(VJ11);
    jbar_ = {{PC(1)}};
  } else {
    detj_ = PV(VJ11) * PV(VJ22) - PV(VJ12) * PV(VJ21);
    // Jbar = y^{-1} (J')^{-1}: numerator adj(y) * adj(J')
    Poly aJ[2][2] = {{PV(VJ22), -PV(VJ21)}, {-PV(VJ12), PV(VJ11)}};
    Poly aY[2][2] = {{PV(VY22), -PV(VY12)}, {-PV(VY12), PV(VY11)}};
    jbar_.assign(2, std::vector<Poly>(2, Poly(long(0))));
    for (unsigned k = 0; k < 2; ++k)
      for (unsigned l = 0; l < 2; ++l) {
        Poly acc(long(0));
        for (unsigned p = 0; p < 2; ++p) acc += aY[k][p] * aJ[p][l];
        jbar_[k][l] = acc;
      }
  }
  sandw_y_.assign(m_, std::vector<Poly>(m_, Poly(long(0))));
  for (unsigned a = 0; a < m_; ++a)
    for (unsigned b = 0; b < m_; ++b) {
      Poly acc(long(0));
      for (unsigned k = 0; k < m_; ++k)
        for (unsigned l = 0; l < m_; ++l)
          acc += jbar_[k][a] * PV(y_var(k + 1, l + 1)) * jbar_[l][b];
      sandw_y_[a][b] = acc;
    }
}

Var SiegelCalculus::y_var(unsigned a, unsigned b) const {
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 1) return VY11;
  if (a == 1 && b == 2) return VY12;
  return VY22;
}
Var SiegelCalculus::x_var(unsigned a, unsigned b) const {
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 1) return VX11;
  if (a == 1 && b == 2) return VX12;
  return VX22;
}
Var SiegelCalculus::t_var(unsigned a, unsigned b) const {
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 1) return VT11;
  if (a == 1 && b == 2) return VT12;
  return VT22;
}
Var SiegelCalculus::j_var(unsigned k, unsigned l) const {
  if (m_ == 1) return VJ11;
  if (k == 1) return l == 1 ? VJ11 : VJ12;
  return l == 1 ? VJ21 : VJ22;
}

Poly SiegelCalculus::adj_y(unsigned a, unsigned b) const {
  if (m_ == 1) return PC(1);
  if (a == b) return PV(y_var(3 - a, 3 - a));
  return -PV(VY12);
}

SiegelExpr SiegelCalculus::seed() const { return seed_shift(0, 0); }

SiegelExpr SiegelCalculus::seed_shift(int ds1, int ds2) const {
  SiegelExpr e(true);
  e.add_term(TermKey{ds1, ds2, 0}, PC(1));
  return e;
}

SiegelExpr SiegelCalculus::d_x(const SiegelExpr& f, unsigned a, unsigned b) const {
  SiegelExpr out(f.exp_marker());
  Poly erule = two_pi_i() * Poly(RingElem(cmult(a, b))) * tau(a, b);
  for (auto& [k, c] : f.terms()) {
    out.add_term(k, c.derivative(x_var(a, b)));
    if (f.exp_marker()) out.add_term(k, c * erule);
  }
  return out;
}

SiegelExpr SiegelCalculus::d_y(const SiegelExpr& f, unsigned a, unsigned b) const {
  SiegelExpr out(f.exp_marker());
  Poly cm = Poly(RingElem(cmult(a, b)));
  Poly trule = cm * tau(a, b);
  Poly drule = cm * adj_y(a, b);
  Poly erule = minus_two_pi() * cm * tau(a, b);
  for (auto& [k, c] : f.terms()) {
    out.add_term(k, c.derivative(y_var(a, b)));
    out.add_term(TermKey{k.t_off - 1, k.d_off, k.j_off},
                 c * trule * (PV(VS1) + PC(k.t_off)));
    out.add_term(TermKey{k.t_off, k.d_off - 1, k.j_off},
                 c * drule * (PV(VS2) + PC(k.d_off)));
    if (f.exp_marker()) out.add_term(k, c * erule);
  }
  return out;
}

SiegelExpr SiegelCalculus::differentiate(const SiegelExpr& f, DOp op, unsigned a,
                                         unsigned b) const {
  RingElem quarter(rat_of(a == b ? 2 : 3, a == b ? 4 : 4));
  // (1+delta_ab)/4
  RingElem q = (a == b) ? RingElem(rat_of(2, 4)) : RingElem(rat_of(1, 4));
  switch (op) {
    case DOp::Hol: {
      SiegelExpr dx = d_x(f, a, b), dy = d_y(f, a, b);
      return dx * Poly(q) + dy * Poly(-(q * RingElem::i()));
    }
    case DOp::Bar: {
      SiegelExpr dx = d_x(f, a, b), dy = d_y(f, a, b);
      return dx * Poly(q) + dy * Poly(q * RingElem::i());
    }
    case DOp::YMat:
      return d_y(f, a, b) * Poly(RingElem(rat_of(a == b ? 1 : 1, a == b ? 1 : 2)));
  }
  throw std::logic_error("unreachable");
}

std::vector<std::vector<SiegelExpr>> SiegelCalculus::bar_mat(const SiegelExpr& f) const {
  std::vector<std::vector<SiegelExpr>> M(m_, std::vector<SiegelExpr>(m_));
  for (unsigned a = 1; a <= m_; ++a)
    for (unsigned b = a; b <= m_; ++b) {
      M[a - 1][b - 1] = differentiate(f, DOp::Bar, a, b);
      if (a != b) M[b - 1][a - 1] = M[a - 1][b - 1];
    }
  return M;
}

std::vector<std::vector<SiegelExpr>> SiegelCalculus::hol_mat(const SiegelExpr& f) const {
  std::vector<std::vector<SiegelExpr>> M(m_, std::vector<SiegelExpr>(m_));
  for (unsigned a = 1; a <= m_; ++a)
    for (unsigned b = a; b <= m_; ++b) {
      M[a - 1][b - 1] = differentiate(f, DOp::Hol, a, b);
      if (a != b) M[b - 1][a - 1] = M[a - 1][b - 1];
    }
  return M;
}

std::vector<std::vector<SiegelExpr>> SiegelCalculus::ymy(
    const std::vector<std::vector<SiegelExpr>>& M) const {
  std::vector<std::vector<SiegelExpr>> R(m_, std::vector<SiegelExpr>(m_));
  for (unsigned k = 0; k < m_; ++k)
    for (unsigned l = 0; l < m_; ++l) {
      SiegelExpr acc;
      for (unsigned p = 0; p < m_; ++p)
        for (unsigned q = 0; q < m_; ++q)
          acc += M[p][q] * (PV(y_var(k + 1, p + 1)) * PV(y_var(q + 1, l + 1)));
      R[k][l] = acc;
    }
  return R;
}

std::vector<std::vector<SiegelExpr>> SiegelCalculus::ym(
    const std::vector<std::vector<SiegelExpr>>& M) const {
  std::vector<std::vector<SiegelExpr>> R(m_, std::vector<SiegelExpr>(m_));
  for (unsigned k = 0; k < m_; ++k)
    for (unsigned l = 0; l < m_; ++l) {
      SiegelExpr acc;
      for (unsigned p = 0; p < m_; ++p) acc += M[p][l] * PV(y_var(k + 1, p + 1));
      R[k][l] = acc;
    }
  return R;
}

SiegelExpr SiegelCalculus::tr_y_bar(const SiegelExpr& f) const {
  auto M = bar_mat(f);
  SiegelExpr acc;
  for (unsigned p = 0; p < m_; ++p)
    for (unsigned q = 0; q < m_; ++q)
      acc += M[q][p] * PV(y_var(p + 1, q + 1));
  return acc;
}

SiegelExpr SiegelCalculus::op_D(const SiegelExpr& f) const {
  auto M = ymy(bar_mat(f));
  SiegelExpr acc;
  for (unsigned a = 1; a <= m_; ++a)
    for (unsigned b = 1; b <= m_; ++b)
      acc += differentiate(M[a - 1][b - 1], DOp::Hol, b, a);
  return acc;
}

// ---- generator actions ----

SiegelExpr SiegelCalculus::act_E(const SiegelExpr& f, unsigned a, unsigned b,
                                 bool plus) const {
  unsigned a0 = a - 1, b0 = b - 1;
  SiegelExpr out(f.exp_marker());
  Poly four_i = Poly(RingElem(4) * RingElem::i());
  for (auto& [key, poly] : f.terms()) {
    // group monomials by their J content
    std::map<Monomial, Poly> groups;
    for (auto& [mono, coef] : poly.terms()) {
      Monomial jpart{}, zpart = mono;
      for (Var v : {VJ11, VJ12, VJ21, VJ22}) {
        jpart.e[v] = mono.e[v];
        zpart.e[v] = 0;
      }
      Poly zp(long(0));
      zp.add_term(zpart, coef);
      auto it = groups.find(jpart);
      if (it == groups.end())
        groups.emplace(jpart, zp);
      else
        it->second += zp;
    }
    for (auto& [jpart, zpoly] : groups) {
      Poly jmono(long(0));
      jmono.add_term(jpart, RingElem(1));
      // (1) action on the z-dependent factor through the sandwich rule
      SiegelExpr f1(f.exp_marker());
      f1.add_term(TermKey{key.t_off, key.d_off, 0}, zpoly);
      auto M = plus ? ymy(hol_mat(f1)) : ymy(bar_mat(f1));
      for (unsigned k = 0; k < m_; ++k)
        for (unsigned l = 0; l < m_; ++l) {
          if (M[k][l].is_zero()) continue;
          Poly factor = plus ? four_i * jbar_[k][a0] * jbar_[l][b0]
                             : -four_i * PV(j_var(k + 1, a)) * PV(j_var(l + 1, b));
          int dshift = plus ? -2 : 0;
          int jshift = plus ? -2 : 0;
          for (auto& [mk, mc] : M[k][l].terms())
            out.add_term(TermKey{mk.t_off, mk.d_off + dshift, key.j_off + jshift},
                         mc * factor * jmono);
        }
      // (2) action on each J letter
      for (unsigned k = 1; k <= m_; ++k)
        for (unsigned l = 1; l <= m_; ++l) {
          unsigned e = jpart.e[j_var(k, l)];
          if (!e || !plus) continue;  // E- annihilates J
          Monomial reduced = jpart;
          reduced.e[j_var(k, l)] -= 1;
          Poly rm(long(0));
          rm.add_term(reduced, RingElem(long(e)));
          Poly contrib(long(0));
          if (l == b) contrib += jbar_[k - 1][a0];
          if (l == a) contrib += jbar_[k - 1][b0];
          if (contrib.is_zero()) continue;
          out.add_term(TermKey{key.t_off, key.d_off - 1, key.j_off - 1},
                       -contrib * rm * zpoly);
        }
      // (3) action on the automorphy power j^{-kappa + n}
      if (plus) {
        Poly factor = PC(2) * (PV(VKAPPA) - PC(key.j_off)) * sandw_y_[a0][b0];
        out.add_term(TermKey{key.t_off, key.d_off - 2, key.j_off - 2},
                     factor * jmono * zpoly);
      }
    }
  }
  return out;
}

SiegelExpr SiegelCalculus::act_B(const SiegelExpr& f, unsigned a, unsigned b) const {
  SiegelExpr out(f.exp_marker());
  for (auto& [key, poly] : f.terms()) {
    for (auto& [mono, coef] : poly.terms()) {
      // J letters: B_ab J_kl = J_ka delta_bl
      for (unsigned k = 1; k <= m_; ++k) {
        unsigned e = mono.e[j_var(k, b)];
        if (!e) continue;
        Monomial mm = mono;
        mm.e[j_var(k, b)] -= 1;
        mm.e[j_var(k, a)] += 1;
        Poly c(long(0));
        c.add_term(mm, coef * RingElem(long(e)));
        out.add_term(key, c);
      }
      // automorphy power: B_ab j^{-kappa+n} = (n - kappa) delta_ab (...)
      if (a == b) {
        Poly c(long(0));
        c.add_term(mono, coef);
        out.add_term(key, c * (PC(key.j_off) - PV(VKAPPA)));
      }
    }
  }
  return out;
}

SiegelExpr SiegelCalculus::act_entry(GenKind kind, unsigned a, unsigned b,
                                     const SiegelExpr& f) const {
  switch (kind) {
    case GenKind::Eplus: return act_E(f, a, b, true);
    case GenKind::Eminus: return act_E(f, a, b, false);
    case GenKind::B: return act_B(f, a, b);
  }
  throw std::logic_error("unreachable");
}

SiegelExpr SiegelCalculus::act_word(const Word& w, const Poly& coeff,
                                    const SiegelExpr& f) const {
  SiegelExpr acc = f;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    acc = act_entry(it->kind, it->k, it->l, acc);
  return acc * coeff;
}

SiegelExpr SiegelCalculus::act_elem(const UEA::Elem& e, const SiegelExpr& f) const {
  SiegelExpr acc(f.exp_marker());
  for (auto& [w, c] : e.terms()) acc += act_word(w, c, f);
  return acc;
}

// ---- trace operators ----

SiegelExpr SiegelCalculus::trace_EE_engine(const SiegelExpr& f) const {
  SiegelExpr acc(f.exp_marker());
  for (unsigned a = 1; a <= m_; ++a)
    for (unsigned b = 1; b <= m_; ++b)
      acc += act_E(act_E(f, b, a, false), a, b, true);
  return reduce_weight(acc);
}

SiegelExpr SiegelCalculus::trace_E4_engine(const SiegelExpr& f, Exec exec) const {
  struct Task {
    unsigned a, b, c, d;
  };
  std::vector<Task> tasks;
  for (unsigned a = 1; a <= m_; ++a)
    for (unsigned b = 1; b <= m_; ++b)
      for (unsigned c = 1; c <= m_; ++c)
        for (unsigned d = 1; d <= m_; ++d) tasks.push_back({a, b, c, d});
  std::vector<SiegelExpr> results(tasks.size());
  auto run = [&](size_t i) {
    const Task& t = tasks[i];
    SiegelExpr e = act_E(f, t.d, t.a, false);
    e = act_E(e, t.c, t.d, true);
    e = act_E(e, t.b, t.c, false);
    e = act_E(e, t.a, t.b, true);
    results[i] = e;
  };
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < long(tasks.size()); ++i) run(size_t(i));
#else
    for (size_t i = 0; i < tasks.size(); ++i) run(i);
#endif
  } else {
    for (size_t i = 0; i < tasks.size(); ++i) run(i);
  }
  SiegelExpr acc(f.exp_marker());
  for (auto& r : results) acc += r;  // fixed order keeps the merge deterministic
  return reduce_weight(acc);
}

SiegelExpr SiegelCalculus::trace_EE_display(const SiegelExpr& f) const {
  Poly coef = Poly(RingElem(8) * RingElem::i()) * (PC(long(m_) + 1) - PV(VKAPPA));
  return op_D(f) * PC(16) + tr_y_bar(f) * coef;
}

SiegelExpr SiegelCalculus::trace_E4_display(const SiegelExpr& f) const {
  long m = long(m_);
  Poly kap = PV(VKAPPA);
  Poly I = PI_();
  Poly c1 = PC(8) * I * PC(m + 1) * (PC(m + 1) - kap) * (PC(m + 2) - PC(2) * kap);
  Poly c2 = PC(16) * PC(m + 1) * (PC(3 * m + 4) - PC(4) * kap);
  Poly c4 = PC(-32) * (PC(m + 1) - kap) * (PC(m + 2) - PC(2) * kap);
  Poly c5 = PC(64) * I * (PC(m + 2) - PC(2) * kap);
  Poly c6 = PC(128) * I * (PC(m + 1) - kap);
  SiegelExpr tyb = tr_y_bar(f);
  SiegelExpr acc = tyb * c1;
  acc += op_D(f) * c2;
  acc += trace_EE_display(tyb) * (PC(4) * I);
  auto M = ymy(bar_mat(f));
  SiegelExpr t4, t5, t6, t7;
  for (unsigned a = 1; a <= m_; ++a)
    for (unsigned b = 1; b <= m_; ++b) {
      const SiegelExpr& Mab = M[a - 1][b - 1];
      t4 += differentiate(Mab, DOp::Bar, b, a);
      auto ydbar = ym(bar_mat(Mab));
      auto ydhol = ym(hol_mat(Mab));
      for (unsigned c = 1; c <= m_; ++c) {
        t5 += differentiate(ydbar[c - 1][b - 1], DOp::Hol, a, c);
        t6 += differentiate(ydhol[c - 1][b - 1], DOp::Bar, a, c);
      }
      auto P = hol_mat(Mab);
      for (unsigned c = 1; c <= m_; ++c) {
        auto Q = ymy(bar_mat(P[b - 1][c - 1]));
        for (unsigned d = 1; d <= m_; ++d)
          t7 += differentiate(Q[c - 1][d - 1], DOp::Hol, d, a);
      }
    }
  acc += t4 * c4;
  acc += t5 * c5;
  acc += t6 * c6;
  acc += t7 * PC(256);
  return acc;
}

SiegelExpr SiegelCalculus::trace_op(unsigned order, const SiegelExpr& f, Route route,
                                    Exec exec) const {
  if (order == 2)
    return route == Route::Engine ? trace_EE_engine(f) : trace_EE_display(f);
  if (order == 4)
    return route == Route::Engine ? trace_E4_engine(f, exec) : trace_E4_display(f);
  throw std::invalid_argument("trace operator order must be 2 or 4");
}

SiegelExpr SiegelCalculus::act_C1(const SiegelExpr& f, Route route) const {
  Poly kap = PV(VKAPPA);
  Poly shift = kap * PC(long(m_)) * (PC(long(m_) + 1) - kap);
  return trace_op(2, f, route) - f * shift;
}

SiegelExpr SiegelCalculus::act_C2(const SiegelExpr& f, Route route, Exec exec) const {
  long m = long(m_);
  Poly kap = PV(VKAPPA);
  SiegelExpr t4 = trace_op(4, f, route, exec);
  SiegelExpr t2 = trace_op(2, f, route);
  Poly quart = PC(m) * kap.pow(4);
  Poly cc = PC((m + 1) * (m + 1)) - PC(2 * (m + 1)) * kap + PC(2) * kap * kap;
  return t4 + f * quart + (t2 - f * (kap * PC(m * (m + 1)))) * cc;
}

SiegelExpr SiegelCalculus::act_center(CenterOp op, const SiegelExpr& f, Route route,
                                      Exec exec) const {
  switch (op) {
    case CenterOp::C1:
      return act_C1(f, route);
    case CenterOp::C2:
      return act_C2(f, route, exec);
    case CenterOp::Dplus: {
      Poly u2 = PV(VU) * PV(VU);
      SiegelExpr c1 = act_C1(f, route);
      SiegelExpr c1c1 = act_C1(c1, route);
      SiegelExpr c2 = act_C2(f, route, exec);
      SiegelExpr acc = c1c1 - c2 + c1 * (PC(11) - PC(2) * (u2 - PC(1)));
      acc += f * (PC(2) * (u2 - PC(1)) * (u2 - PC(4)));
      return acc * PQ(1, 2);
    }
    case CenterOp::Dminus: {
      Poly v2 = PV(VV) * PV(VV);
      SiegelExpr c1 = act_C1(f, route);
      SiegelExpr c1c1 = act_C1(c1, route);
      SiegelExpr c2 = act_C2(f, route, exec);
      SiegelExpr acc = c2 * PC(2) - c1c1 - c1 * (PC(34) + PC(2) * (v2 - PC(9)));
      acc += f * ((v2 - PC(9)) * (v2 - PC(1)));
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

SiegelExpr SiegelCalculus::reduce_weight(const SiegelExpr& f) const {
  SiegelExpr out(f.exp_marker());
  std::map<std::pair<int, int>, std::map<int, Poly>> buckets;
  for (auto& [k, c] : f.terms()) buckets[{k.t_off, k.d_off}][k.j_off] += c;
  for (auto& [td, js] : buckets) {
    int nmin = 0;
    for (auto& [j, c] : js) nmin = std::min(nmin, j);
    Poly R(long(0));
    for (auto& [j, c] : js) R += c * detj_.pow(unsigned(j - nmin));
    if (R.is_zero()) continue;
    Poly Q = R;
    if (nmin < 0) {
      auto q = R.div_exact(detj_.pow(unsigned(-nmin)));
      if (!q)
        throw decomposition_error("weight reduction: power of det(J) does not divide");
      Q = *q;
    }
    if (Q.uses_any(kJMask))
      throw decomposition_error("weight reduction left automorphy entries behind");
    out.add_term(TermKey{td.first, td.second, 0}, Q);
  }
  return out;
}

ShiftDecomposition SiegelCalculus::decompose(const SiegelExpr& f) const {
  if (!f.exp_marker()) throw decomposition_error("decomposition expects the exponential seed");
  for (auto& [k, c] : f.terms()) {
    if (k.j_off != 0) throw decomposition_error("decomposition expects weight-reduced input");
    if (c.uses_any(kJMask | kXMask))
      throw decomposition_error("coefficients must be free of x and J entries");
  }
  ShiftDecomposition out;
  if (f.is_zero()) return out;
  if (m_ == 1) {
    for (auto& [k, c] : f.terms()) {
      Poly at0 = c.substitute({{VS1, Poly(long(0))}});
      if (at0.is_zero()) continue;
      if (k.t_off < 0)
        throw decomposition_error("negative trace-power offset survives at s1 = 0");
      Poly folded = at0 * PV(VT11).pow(unsigned(k.t_off));
      for (auto& [mono, coef] : folded.terms()) {
        Monomial mm = mono;
        unsigned ypow = mm.e[VY11];
        mm.e[VY11] = 0;
        Poly piece(long(0));
        piece.add_term(mm, coef);
        ShiftKey key{0, k.t_off + k.d_off + int(ypow)};
        auto it = out.coeffs.find(key);
        if (it == out.coeffs.end())
          out.coeffs[key] = piece;
        else {
          it->second += piece;
          if (it->second.is_zero()) out.coeffs.erase(it);
        }
      }
    }
    return out;
  }
  // m == 2: clear offsets and peel leading y-monomials
  int A0 = 0, B0 = 0;
  for (auto& [k, c] : f.terms()) {
    A0 = std::max(A0, -k.t_off);
    B0 = std::max(B0, -k.d_off);
  }
  Poly Texp = PV(VT11) * PV(VY11) + PC(2) * PV(VT12) * PV(VY12) + PV(VT22) * PV(VY22);
  Poly Dexp = PV(VY11) * PV(VY22) - PV(VY12) * PV(VY12);
  Poly R(long(0));
  for (auto& [k, c] : f.terms())
    R += c * Texp.pow(unsigned(k.t_off + A0)) * Dexp.pow(unsigned(k.d_off + B0));
  unsigned guard = 0;
  while (!R.is_zero()) {
    if (++guard > 5000) throw decomposition_error("shift extraction did not terminate");
    std::array<unsigned, 3> lead{0, 0, 0};
    bool first = true;
    for (auto& [mono, c] : R.terms()) {
      std::array<unsigned, 3> yk{mono.e[VY11], mono.e[VY12], mono.e[VY22]};
      if (first || yk > lead) {
        lead = yk;
        first = false;
      }
    }
    if (lead[1] != 0 || lead[0] < lead[2])
      throw decomposition_error("leading y-monomial incompatible with a shift basis");
    unsigned A = lead[0] - lead[2], B = lead[2];
    Poly cpart(long(0));
    for (auto& [mono, c] : R.terms()) {
      if (mono.e[VY11] != lead[0] || mono.e[VY12] != lead[1] || mono.e[VY22] != lead[2])
        continue;
      Monomial mm = mono;
      mm.e[VY11] = mm.e[VY12] = mm.e[VY22] = 0;
      cpart.add_term(mm, c);
    }
    auto d = cpart.div_exact(PV(VT11).pow(A));
    if (!d) throw decomposition_error("coefficient not divisible by the leading tau power");
    R -= *d * Texp.pow(A) * Dexp.pow(B);
    ShiftKey key{int(A) - A0, int(B) - B0};
    auto it = out.coeffs.find(key);
    if (it == out.coeffs.end())
      out.coeffs[key] = *d;
    else {
      it->second += *d;
      if (it->second.is_zero()) out.coeffs.erase(it);
    }
  }
  for (auto& [k, c] : out.coeffs)
    if (c.uses_any(kYMask))
      throw decomposition_error("shift coefficient still depends on y");
  return out;
}

bool SiegelCalculus::same_function(const SiegelExpr& a, const SiegelExpr& b) const {
  SiegelExpr diff = a - b;
  if (diff.is_zero()) return true;
  int A0 = 0, B0 = 0, J0 = 0;
  for (auto& [k, c] : diff.terms()) {
    A0 = std::max(A0, -k.t_off);
    B0 = std::max(B0, -k.d_off);
    J0 = std::max(J0, -k.j_off);
  }
  Poly Texp = (m_ == 1) ? PV(VT11) * PV(VY11)
                        : PV(VT11) * PV(VY11) + PC(2) * PV(VT12) * PV(VY12) +
                              PV(VT22) * PV(VY22);
  Poly Dexp = (m_ == 1) ? PV(VY11) : PV(VY11) * PV(VY22) - PV(VY12) * PV(VY12);
  // j^{-kappa+n} = j^{-kappa} det(J)^n, so clearing det(J) powers reduces
  // function equality to a polynomial identity in the free entries
  Poly R(long(0));
  for (auto& [k, c] : diff.terms())
    R += c * Texp.pow(unsigned(k.t_off + A0)) * Dexp.pow(unsigned(k.d_off + B0)) *
         detj_.pow(unsigned(k.j_off + J0));
  return R.is_zero();
}

namespace {
ShiftDecomposition bind_kappa(const ShiftDecomposition& dec, long kappa) {
  ShiftDecomposition out;
  std::map<Var, Poly> bind{{VKAPPA, PC(kappa)}};
  for (auto& [k, c] : dec.coeffs) {
    Poly cc = c.substitute(bind);
    if (!cc.is_zero()) out.coeffs[k] = cc;
  }
  return out;
}
}  // namespace

ShiftDecomposition SiegelCalculus::casimir_action(CenterOp op, long kappa, Route route,
                                                  Exec exec) const {
  SiegelExpr res = act_center(op, seed(), route, exec);
  res = reduce_weight(res);
  return bind_kappa(decompose(res), kappa);
}

SiegelCalculus::Suite SiegelCalculus::casimir_suite(long kappa, Route route, Exec exec,
                                                    const SiegelExpr* t4_of_seed) const {
  SiegelExpr H = seed();
  SiegelExpr c1 = act_C1(H, route);
  SiegelExpr c1c1 = act_C1(c1, route);
  SiegelExpr c2;
  if (t4_of_seed) {
    long m = long(m_);
    Poly kap = PV(VKAPPA);
    SiegelExpr t2 = trace_op(2, H, route);
    Poly cc = PC((m + 1) * (m + 1)) - PC(2 * (m + 1)) * kap + PC(2) * kap * kap;
    c2 = *t4_of_seed + H * (PC(m) * kap.pow(4)) + (t2 - H * (kap * PC(m * (m + 1)))) * cc;
  } else {
    c2 = act_C2(H, route, exec);  // the one order-4 evaluation
  }
  Poly u2 = PV(VU) * PV(VU), v2 = PV(VV) * PV(VV);
  SiegelExpr dplus =
      (c1c1 - c2 + c1 * (PC(11) - PC(2) * (u2 - PC(1))) + H * (PC(2) * (u2 - PC(1)) * (u2 - PC(4)))) *
      PQ(1, 2);
  SiegelExpr dminus =
      c2 * PC(2) - c1c1 - c1 * (PC(34) + PC(2) * (v2 - PC(9))) + H * ((v2 - PC(9)) * (v2 - PC(1)));
  Suite s;
  s.c1 = bind_kappa(decompose(reduce_weight(c1)), kappa);
  s.c2 = bind_kappa(decompose(reduce_weight(c2)), kappa);
  s.dplus = bind_kappa(decompose(reduce_weight(dplus)), kappa);
  s.dminus = bind_kappa(decompose(reduce_weight(dminus)), kappa);
  return s;
}

}  // namespace holoproj
