#include "holoproj/harish_chandra.hpp"

#include <algorithm>

namespace holoproj {

HarishChandra::HarishChandra(const UEA& uea) : uea_(uea) {
  unsigned m = uea_.lie().m();
  if (m > 2) throw std::domain_error("Cartan polynomials wired for m <= 2");
  delta_.assign(m, Rat(0));
  std::vector<BasisIndex> positives;
  for (unsigned k = 1; k <= m; ++k)
    for (unsigned l = k + 1; l <= m; ++l) positives.push_back(BB(k, l));
  for (unsigned k = 1; k <= m; ++k)
    for (unsigned l = k; l <= m; ++l) positives.push_back(EM(k, l));
  for (auto& p : positives) {
    auto root = uea_.lie().root_of(p);
    for (unsigned j = 0; j < m; ++j) delta_[j] += root[j] / 2;
  }
}

Var HarishChandra::cartan_var(unsigned j) const { return j == 1 ? VB11 : VB22; }

Poly HarishChandra::p_plus(const UEA::Elem& x) const {
  Poly out(long(0));
  for (auto& [w, c] : x.terms()) {
    bool cartan_only = true;
    for (auto& b : w) {
      if (!(b.kind == GenKind::B && b.k == b.l)) {
        cartan_only = false;
        break;
      }
    }
    if (!cartan_only) continue;
    Poly mono = c;
    for (auto& b : w) mono *= PV(cartan_var(b.k));
    out += mono;
  }
  return out;
}

Poly HarishChandra::tau_plus(const Poly& cartan) const {
  std::map<Var, Poly> shift;
  for (unsigned j = 1; j <= uea_.lie().m(); ++j)
    shift[cartan_var(j)] = PV(cartan_var(j)) - Poly(RingElem(delta_[j - 1]));
  return cartan.substitute(shift);
}

Poly HarishChandra::gamma(const UEA::Elem& x) const { return tau_plus(p_plus(x)); }

Poly HarishChandra::eval_inf_char(const Poly& l1, const Poly& l2, const UEA::Elem& x) const {
  std::map<Var, Poly> at{{VB11, l1}, {VB22, l2}};
  return gamma(x).substitute(at);
}

HarishChandra::FactorizationReport HarishChandra::factorization_check() const {
  FactorizationReport rep;
  Poly L1 = PV(VL1), L2 = PV(VL2), u = PV(VU), v = PV(VV);
  rep.gamma_plus = eval_inf_char(L1, L2, uea_.center_plus());
  rep.gamma_minus = eval_inf_char(L1, L2, uea_.center_minus());
  Poly plus_target = (L1 * L1 - u * u) * (L2 * L2 - u * u);
  Poly minus_target = ((L1 + L2) * (L1 + L2) - v * v) * ((L1 - L2) * (L1 - L2) - v * v);
  rep.plus_ok = (rep.gamma_plus == plus_target);
  rep.minus_ok = (rep.gamma_minus == minus_target);
  return rep;
}

bool HarishChandra::weyl_invariant(const Poly& p) const {
  Poly b1 = PV(VB11), b2 = PV(VB22);
  std::map<Var, Poly> flip1{{VB11, -b1}};
  std::map<Var, Poly> flip2{{VB22, -b2}};
  std::map<Var, Poly> swap12{{VB11, b2}, {VB22, b1}};
  return p.substitute(flip1) == p && p.substitute(flip2) == p && p.substitute(swap12) == p;
}

Poly resultant(const Poly& p, const Poly& q, Var var) {
  unsigned dp = p.degree(var), dq = q.degree(var);
  if (dp == 0 && dq == 0) throw std::invalid_argument("resultant needs a nonconstant input");
  // coefficients of var^k
  auto coeffs = [&](const Poly& f, unsigned deg) {
    std::vector<Poly> cs(deg + 1, Poly(long(0)));
    for (auto& [m, c] : f.terms()) {
      unsigned k = m.deg(var);
      Monomial mm = m;
      mm.e[var] = 0;
      Poly term;
      term.add_term(mm, c);
      cs[k] += term;
    }
    return cs;
  };
  auto cp = coeffs(p, dp), cq = coeffs(q, dq);
  unsigned n = dp + dq;
  std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly(long(0))));
  for (unsigned i = 0; i < dq; ++i)
    for (unsigned j = 0; j <= dp; ++j) M[i][i + j] = cp[dp - j];
  for (unsigned i = 0; i < dp; ++i)
    for (unsigned j = 0; j <= dq; ++j) M[dq + i][i + j] = cq[dq - j];
  // Bareiss fraction-free elimination
  Poly prev = PC(1);
  int sign = 1;
  for (unsigned r = 0; r + 1 < n; ++r) {
    if (M[r][r].is_zero()) {
      unsigned s = r + 1;
      while (s < n && M[s][r].is_zero()) ++s;
      if (s == n) return Poly(long(0));
      std::swap(M[s], M[r]);
      sign = -sign;
    }
    for (unsigned i = r + 1; i < n; ++i)
      for (unsigned j = r + 1; j < n; ++j) {
        Poly num = M[r][r] * M[i][j] - M[i][r] * M[r][j];
        auto d = num.div_exact(prev);
        if (!d) throw std::logic_error("Bareiss division not exact");
        M[i][j] = *d;
      }
    for (unsigned i = r + 1; i < n; ++i) M[i][r] = Poly(long(0));
    prev = M[r][r];
    if (prev.is_zero()) return Poly(long(0));
  }
  Poly det = M[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

static std::vector<mpz_class> small_divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> ds;
  if (n == 0) return ds;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      ds.push_back(n / d);
    }
    if (d > 2000000) break;  // inputs here are tiny; guard anyway
  }
  return ds;
}

std::vector<Rat> rational_roots(const Poly& p, Var var) {
  std::vector<Rat> roots;
  if (p.is_zero()) return roots;
  unsigned deg = p.degree(var);
  std::vector<Rat> cs(deg + 1, Rat(0));
  for (auto& [m, c] : p.terms()) {
    Monomial mm = m;
    unsigned k = mm.deg(var);
    mm.e[var] = 0;
    if (!mm.is_one() || !c.is_constant() || !c.constant().is_real())
      throw std::invalid_argument("rational_roots wants a univariate rational polynomial");
    cs[k] += c.constant().re;
  }
  // strip zero roots
  unsigned low = 0;
  while (low <= deg && cs[low] == 0) ++low;
  if (low > 0 && low <= deg) roots.push_back(Rat(0));
  if (low > deg) return roots;
  // clear denominators
  mpz_class lcm = 1;
  for (unsigned k = low; k <= deg; ++k) lcm = lcm / gcd(lcm, cs[k].get_den()) * cs[k].get_den();
  std::vector<mpz_class> ic(deg + 1);
  for (unsigned k = low; k <= deg; ++k) ic[k] = mpz_class(cs[k] * lcm);
  auto ps = small_divisors(ic[low]);
  auto qs = small_divisors(ic[deg]);
  auto value_at = [&](const Rat& r) {
    Rat acc = 0, pw = 1;
    for (unsigned k = low; k <= deg; ++k) {
      acc += Rat(ic[k]) * pw;
      pw *= r;
    }
    return acc;
  };
  std::vector<Rat> found;
  for (auto& pn : ps)
    for (auto& qn : qs)
      for (int s : {1, -1}) {
        Rat cand(s * pn, qn);
        cand.canonicalize();
        if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
        if (value_at(cand) == 0) found.push_back(cand);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::pair<Rat, Rat>> HarishChandra::common_zeros_C1_C2() const {
  Poly L1 = PV(VL1), L2 = PV(VL2);
  Poly p = eval_inf_char(L1, L2, uea_.C1());
  Poly q = eval_inf_char(L1, L2, uea_.C2());
  Poly res = resultant(p, q, VL1);
  std::vector<std::pair<Rat, Rat>> zeros;
  for (auto& l2 : rational_roots(res, VL2)) {
    std::map<Var, Poly> bind{{VL2, Poly(RingElem(l2))}};
    Poly p1 = p.substitute(bind);
    for (auto& l1 : rational_roots(p1, VL1)) {
      std::map<Var, RingElem> at{{VL1, RingElem(l1)}, {VL2, RingElem(l2)}};
      if (p.eval(at).is_zero() && q.eval(at).is_zero()) zeros.emplace_back(l1, l2);
    }
  }
  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
  return zeros;
}

}  // namespace holoproj
