#include "holoproj/uea.hpp"

#include <algorithm>
#include <sstream>

namespace holoproj {

UEA::UEA(unsigned m) : lie_(m) {
  // negative-root letters: E+ then lower-triangular B
  for (unsigned k = 1; k <= m; ++k)
    for (unsigned l = k; l <= m; ++l) order_.push_back(EP(k, l));
  for (unsigned k = 1; k <= m; ++k)
    for (unsigned l = 1; l < k; ++l) order_.push_back(BB(k, l));
  // Cartan
  for (unsigned k = 1; k <= m; ++k) order_.push_back(BB(k, k));
  // positive-root letters: upper-triangular B then E-
  for (unsigned k = 1; k <= m; ++k)
    for (unsigned l = k + 1; l <= m; ++l) order_.push_back(BB(k, l));
  for (unsigned k = 1; k <= m; ++k)
    for (unsigned l = k; l <= m; ++l) order_.push_back(EM(k, l));
  for (unsigned i = 0; i < order_.size(); ++i) rank_[order_[i]] = i;
}

unsigned UEA::rank_of(const BasisIndex& b) const {
  auto it = rank_.find(b);
  if (it == rank_.end()) throw std::out_of_range("letter not in basis");
  return it->second;
}

void UEA::Elem::add(const Word& w, const Poly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_[w] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly UEA::Elem::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly(long(0)) : it->second;
}

unsigned UEA::Elem::degree() const {
  unsigned d = 0;
  for (auto& [w, c] : terms_) d = std::max(d, unsigned(w.size()));
  return d;
}

std::string UEA::Elem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (auto& b : w) os << "*" << b.str();
  }
  return os.str();
}

UEA::Elem UEA::one() const {
  Elem e;
  e.add({}, PC(1));
  return e;
}

UEA::Elem UEA::letter(const BasisIndex& b) const {
  rank_of(b);
  Elem e;
  e.add({b}, PC(1));
  return e;
}

UEA::Elem UEA::nf_word(const Word& w) const {
  auto it = nf_cache_.find(w);
  if (it != nf_cache_.end()) return it->second;
  // find the first inversion
  size_t pos = w.size();
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (rank_of(w[i]) > rank_of(w[i + 1])) {
      pos = i;
      break;
    }
  }
  Elem result;
  if (pos == w.size()) {
    result.add(w, PC(1));
    nf_cache_[w] = result;
    return result;
  }
  // w = u x y v  ->  u y x v + u [x,y] v
  Word swapped = w;
  std::swap(swapped[pos], swapped[pos + 1]);
  result = nf_word(swapped);
  auto br = lie_.bracket(w[pos], w[pos + 1]);
  for (auto& [b, c] : br) {
    Word shorter;
    shorter.reserve(w.size() - 1);
    shorter.insert(shorter.end(), w.begin(), w.begin() + long(pos));
    shorter.push_back(b);
    shorter.insert(shorter.end(), w.begin() + long(pos) + 2, w.end());
    Elem sub = nf_word(shorter);
    for (auto& [sw, sc] : sub.terms_) result.add(sw, sc * RingElem(c));
  }
  nf_cache_[w] = result;
  return result;
}

UEA::Elem UEA::normal_form(const Word& w, const Poly& coeff) const {
  Elem nf = nf_word(w);
  Elem out;
  for (auto& [sw, sc] : nf.terms_) out.add(sw, sc * coeff);
  return out;
}

UEA::Elem UEA::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (auto& [w, c] : b.terms_) r.add(w, c);
  return r;
}

UEA::Elem UEA::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (auto& [w, c] : b.terms_) r.add(w, -c);
  return r;
}

UEA::Elem UEA::mul(const Elem& a, const Elem& b) const {
  Elem r;
  for (auto& [wa, ca] : a.terms_)
    for (auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Elem nf = normal_form(w, ca * cb);
      for (auto& [sw, sc] : nf.terms_) r.add(sw, sc);
    }
  return r;
}

UEA::Elem UEA::scale(const Elem& a, const Poly& c) const {
  Elem r;
  for (auto& [w, x] : a.terms_) r.add(w, x * c);
  return r;
}

UEA::Elem UEA::commutator(const Elem& a, const Elem& b) const {
  return sub(mul(a, b), mul(b, a));
}

UEA::Elem UEA::casimir(unsigned r) const {
  unsigned d = lie_.dim();
  std::vector<std::vector<Rat>> id(d, std::vector<Rat>(d, 0));
  for (unsigned i = 0; i < d; ++i) id[i][i] = 1;
  return casimir_from_basis(r, id);
}

UEA::Elem UEA::casimir_from_basis(unsigned r,
                                  const std::vector<std::vector<Rat>>& change) const {
  unsigned d = lie_.dim();
  if (change.size() != d) throw std::invalid_argument("change of basis has wrong size");
  // realized matrices of the new basis
  std::vector<MatC> mats;
  mats.reserve(d);
  for (unsigned i = 0; i < d; ++i) {
    MatC acc(2 * lie_.m());
    for (unsigned j = 0; j < d; ++j) {
      if (change[i][j] == 0) continue;
      MatC mj = lie_.realize(lie_.basis()[j]);
      for (unsigned a = 0; a < 2 * lie_.m(); ++a)
        for (unsigned b = 0; b < 2 * lie_.m(); ++b)
          acc.at(a, b) = acc.at(a, b) + GaussRat(change[i][j]) * mj.at(a, b);
    }
    mats.push_back(acc);
  }
  // Gram matrix and inverse over GaussRat
  std::vector<std::vector<GaussRat>> G(d, std::vector<GaussRat>(2 * d));
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j)
      G[i][j] = (mats[i] * mats[j]).trace() * GaussRat(rat_of(1, 2));
    G[i][d + i] = GaussRat(Rat(1));
  }
  for (unsigned c = 0; c < d; ++c) {
    unsigned p = c;
    while (p < d && G[p][c].is_zero()) ++p;
    if (p == d) throw std::invalid_argument("change of basis is singular");
    std::swap(G[p], G[c]);
    GaussRat inv = G[c][c].inv();
    for (auto& x : G[c]) x = x * inv;
    for (unsigned rr = 0; rr < d; ++rr) {
      if (rr == c || G[rr][c].is_zero()) continue;
      GaussRat f = G[rr][c];
      for (unsigned cc = 0; cc < 2 * d; ++cc) G[rr][cc] = G[rr][cc] - f * G[c][cc];
    }
  }
  // dual basis elements as UEA combinations of the original letters
  std::vector<Elem> duals(d);
  for (unsigned i = 0; i < d; ++i) {
    Elem acc;
    for (unsigned j = 0; j < d; ++j) {
      const GaussRat& gij = G[i][d + j];
      if (gij.is_zero()) continue;
      for (unsigned b = 0; b < d; ++b) {
        if (change[j][b] == 0) continue;
        acc.add({lie_.basis()[b]}, Poly(RingElem(gij * GaussRat(change[j][b]))));
      }
    }
    duals[i] = acc;
  }
  // pair products of matrices for fast traces
  std::vector<std::vector<MatC>> prod2;
  if (r == 4) {
    prod2.assign(d, std::vector<MatC>(d));
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) prod2[i][j] = mats[i] * mats[j];
  }
  Elem total;
  std::vector<unsigned> idx(r, 0);
  bool done = false;
  while (!done) {
    GaussRat tr;
    if (r == 2) {
      tr = (mats[idx[0]] * mats[idx[1]]).trace();
    } else {
      const MatC& P = prod2[idx[0]][idx[1]];
      const MatC& Q = prod2[idx[2]][idx[3]];
      GaussRat acc;
      for (unsigned a = 0; a < 2 * lie_.m(); ++a)
        for (unsigned b = 0; b < 2 * lie_.m(); ++b) acc = acc + P.at(a, b) * Q.at(b, a);
      tr = acc;
    }
    if (!tr.is_zero()) {
      Elem prod = duals[idx[0]];
      for (unsigned k = 1; k < r; ++k) prod = mul(prod, duals[idx[k]]);
      total = add(total, scale(prod, Poly(RingElem(tr))));
    }
    unsigned p = r;
    while (p > 0) {
      if (++idx[p - 1] < d) break;
      idx[p - 1] = 0;
      --p;
    }
    if (p == 0) done = true;
  }
  return total;
}

UEA::Elem UEA::C1() const { return scale(casimir(2), PQ(1, 2)); }
UEA::Elem UEA::C2() const { return scale(casimir(4), PQ(1, 2)); }

UEA::Elem UEA::center_plus() const {
  Elem c1 = C1(), c2 = C2();
  Poly u2 = PV(VU) * PV(VU);
  Elem acc = mul(c1, c1);
  acc = sub(acc, c2);
  acc = add(acc, scale(c1, PC(11)));
  acc = sub(acc, scale(c1, PC(2) * (u2 - PC(1))));
  acc = add(acc, scale(one(), PC(2) * (u2 - PC(1)) * (u2 - PC(4))));
  return scale(acc, PQ(1, 2));
}

UEA::Elem UEA::center_minus() const {
  Elem c1 = C1(), c2 = C2();
  Poly v2 = PV(VV) * PV(VV);
  Elem acc = scale(c2, PC(2));
  acc = sub(acc, mul(c1, c1));
  acc = sub(acc, scale(c1, PC(34)));
  acc = sub(acc, scale(c1, PC(2) * (v2 - PC(9))));
  acc = add(acc, scale(one(), (v2 - PC(9)) * (v2 - PC(1))));
  return acc;
}

UEA::IdentityReport UEA::verify_identity(const Elem& lhs, const Elem& rhs) const {
  Elem diff = sub(lhs, rhs);
  return {diff.is_zero(), diff};
}

UEA::MatU UEA::mat_Eplus() const {
  unsigned m = lie_.m();
  MatU M(m, std::vector<Elem>(m));
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) M[a][b] = letter(EP(a + 1, b + 1));
  return M;
}

UEA::MatU UEA::mat_Eminus() const {
  unsigned m = lie_.m();
  MatU M(m, std::vector<Elem>(m));
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) M[a][b] = letter(EM(a + 1, b + 1));
  return M;
}

UEA::MatU UEA::mat_B() const {
  unsigned m = lie_.m();
  MatU M(m, std::vector<Elem>(m));
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) M[a][b] = letter(BB(a + 1, b + 1));
  return M;
}

UEA::MatU UEA::mat_Bstar() const {
  unsigned m = lie_.m();
  MatU M(m, std::vector<Elem>(m));
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) M[a][b] = letter(BB(b + 1, a + 1));
  return M;
}

UEA::MatU UEA::mat_mul(const MatU& a, const MatU& b) const {
  unsigned m = unsigned(a.size());
  MatU r(m, std::vector<Elem>(m));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) {
      Elem acc;
      for (unsigned k = 0; k < m; ++k) acc = add(acc, mul(a[i][k], b[k][j]));
      r[i][j] = acc;
    }
  return r;
}

UEA::Elem UEA::mat_trace(const MatU& a) const {
  Elem acc;
  for (unsigned i = 0; i < a.size(); ++i) acc = add(acc, a[i][i]);
  return acc;
}

UEA::Elem UEA::trace_prod(const std::vector<MatU>& factors) const {
  if (factors.empty()) return zero();
  MatU acc = factors[0];
  for (size_t k = 1; k < factors.size(); ++k) acc = mat_mul(acc, factors[k]);
  return mat_trace(acc);
}

}  // namespace holoproj
