#include "holoproj/sp_lie.hpp"

#include <sstream>

namespace holoproj {

std::string BasisIndex::str() const {
  std::ostringstream os;
  switch (kind) {
    case GenKind::Eplus: os << "E+"; break;
    case GenKind::Eminus: os << "E-"; break;
    case GenKind::B: os << "B"; break;
  }
  os << unsigned(k) << unsigned(l);
  return os.str();
}

MatC MatC::operator*(const MatC& o) const {
  MatC r(n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      const GaussRat& x = at(i, k);
      if (x.is_zero()) continue;
      for (unsigned j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
    }
  return r;
}

MatC MatC::operator-(const MatC& o) const {
  MatC r(n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

MatC MatC::operator+(const MatC& o) const {
  MatC r(n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

bool MatC::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

GaussRat MatC::trace() const {
  GaussRat t;
  for (unsigned i = 0; i < n_; ++i) t = t + at(i, i);
  return t;
}

SpLie::SpLie(unsigned m) : m_(m) {
  if (m < 1 || m > 3) throw std::domain_error("genus out of supported range");
  for (unsigned k = 1; k <= m; ++k)
    for (unsigned l = k; l <= m; ++l) basis_.push_back(EP(k, l));
  for (unsigned k = 1; k <= m; ++k)
    for (unsigned l = k; l <= m; ++l) basis_.push_back(EM(k, l));
  for (unsigned k = 1; k <= m; ++k)
    for (unsigned l = 1; l <= m; ++l) basis_.push_back(BB(k, l));
  realized_.reserve(basis_.size());
  for (auto& b : basis_) realized_.push_back(realize(b));
  build_expander();
}

unsigned SpLie::index_of(const BasisIndex& b) const {
  for (unsigned i = 0; i < basis_.size(); ++i)
    if (basis_[i] == b) return i;
  throw std::out_of_range("basis index not in range for this genus");
}

MatC SpLie::realize(const BasisIndex& b) const {
  if (b.k < 1 || b.k > m_ || b.l < 1 || b.l > m_)
    throw std::out_of_range("basis index out of range");
  unsigned n = 2 * m_;
  MatC g(n);
  unsigned k = b.k - 1, l = b.l - 1;
  GaussRat half(rat_of(1, 2));
  GaussRat ihalf(Rat(0), rat_of(1, 2));
  if (b.kind == GenKind::B) {
    // blocks [[A, S], [-S, A]], A = (e_kl - e_lk)/2, S = i(e_kl + e_lk)/2
    g.at(k, l) = g.at(k, l) + half;
    g.at(l, k) = g.at(l, k) - half;
    g.at(m_ + k, m_ + l) = g.at(m_ + k, m_ + l) + half;
    g.at(m_ + l, m_ + k) = g.at(m_ + l, m_ + k) - half;
    g.at(k, m_ + l) = g.at(k, m_ + l) + ihalf;
    g.at(l, m_ + k) = g.at(l, m_ + k) + ihalf;
    g.at(m_ + k, l) = g.at(m_ + k, l) - ihalf;
    g.at(m_ + l, k) = g.at(m_ + l, k) - ihalf;
    return g;
  }
  // blocks [[X, +-iX], [+-iX, -X]], X = (e_kl + e_lk)/2
  bool plus = (b.kind == GenKind::Eplus);
  GaussRat s = plus ? GaussRat(Rat(0), Rat(1)) : GaussRat(Rat(0), Rat(-1));
  auto addX = [&](unsigned i, unsigned j) {
    g.at(i, j) = g.at(i, j) + half;
    g.at(i, m_ + j) = g.at(i, m_ + j) + s * half;
    g.at(m_ + i, j) = g.at(m_ + i, j) + s * half;
    g.at(m_ + i, m_ + j) = g.at(m_ + i, m_ + j) - half;
  };
  addX(k, l);
  addX(l, k);
  return g;
}

bool SpLie::in_symplectic(const MatC& g) const {
  unsigned n = 2 * m_;
  MatC W(n);
  for (unsigned i = 0; i < m_; ++i) {
    W.at(i, m_ + i) = GaussRat(Rat(-1));
    W.at(m_ + i, i) = GaussRat(Rat(1));
  }
  MatC gt(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) gt.at(i, j) = g.at(j, i);
  return (gt * W + W * g).is_zero();
}

void SpLie::build_expander() {
  unsigned n = 2 * m_, d = dim(), cols = n * n;
  // rows = basis matrices flattened; reduce the transpose for expansion
  std::vector<std::vector<GaussRat>> A(cols, std::vector<GaussRat>(d));
  for (unsigned b = 0; b < d; ++b)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) A[i * n + j][b] = realized_[b].at(i, j);
  // Gauss-Jordan with column pivots tracked; store the elimination as an
  // augmented system so expand() can back-substitute quickly.
  rref_.assign(cols, {});
  pivot_col_.assign(d, -1);
  std::vector<std::vector<GaussRat>> M(cols, std::vector<GaussRat>(d + cols));
  for (unsigned r = 0; r < cols; ++r) {
    for (unsigned c = 0; c < d; ++c) M[r][c] = A[r][c];
    M[r][d + r] = GaussRat(Rat(1));
  }
  unsigned row = 0;
  for (unsigned c = 0; c < d && row < cols; ++c) {
    unsigned p = row;
    while (p < cols && M[p][c].is_zero()) ++p;
    if (p == cols) continue;
    std::swap(M[p], M[row]);
    GaussRat inv = M[row][c].inv();
    for (auto& x : M[row]) x = x * inv;
    for (unsigned r = 0; r < cols; ++r) {
      if (r == row || M[r][c].is_zero()) continue;
      GaussRat f = M[r][c];
      for (unsigned cc = 0; cc < d + cols; ++cc) M[r][cc] = M[r][cc] - f * M[row][cc];
    }
    pivot_col_[c] = int(row);
    ++row;
  }
  rref_ = std::move(M);

  // Gram matrix and its inverse, for duals.
  std::vector<std::vector<GaussRat>> G(d, std::vector<GaussRat>(2 * d));
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j)
      G[i][j] = (realized_[i] * realized_[j]).trace() * GaussRat(rat_of(1, 2));
    G[i][d + i] = GaussRat(Rat(1));
  }
  for (unsigned c = 0; c < d; ++c) {
    unsigned p = c;
    while (p < d && G[p][c].is_zero()) ++p;
    if (p == d) throw std::logic_error("degenerate bilinear form");
    std::swap(G[p], G[c]);
    GaussRat inv = G[c][c].inv();
    for (auto& x : G[c]) x = x * inv;
    for (unsigned r = 0; r < d; ++r) {
      if (r == c || G[r][c].is_zero()) continue;
      GaussRat f = G[r][c];
      for (unsigned cc = 0; cc < 2 * d; ++cc) G[r][cc] = G[r][cc] - f * G[c][cc];
    }
  }
  gram_inv_.assign(d, std::vector<GaussRat>(d));
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) gram_inv_[i][j] = G[i][d + j];
}

std::vector<GaussRat> SpLie::expand(const MatC& g) const {
  unsigned n = 2 * m_, d = dim(), cols = n * n;
  std::vector<GaussRat> rhs(cols);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) rhs[i * n + j] = g.at(i, j);
  // apply the stored row operations: solution lives in the pivot rows
  std::vector<GaussRat> transformed(cols);
  for (unsigned r = 0; r < cols; ++r) {
    GaussRat acc;
    for (unsigned k = 0; k < cols; ++k) {
      const GaussRat& f = rref_[r][d + k];
      if (!f.is_zero()) acc = acc + f * rhs[k];
    }
    transformed[r] = acc;
  }
  std::vector<GaussRat> coef(d);
  for (unsigned c = 0; c < d; ++c) {
    if (pivot_col_[c] < 0) throw std::logic_error("expansion failure: basis not full rank");
    coef[c] = transformed[unsigned(pivot_col_[c])];
  }
  // residual check: rows without pivots must vanish
  std::vector<bool> is_pivot(cols, false);
  for (unsigned c = 0; c < d; ++c) is_pivot[unsigned(pivot_col_[c])] = true;
  for (unsigned r = 0; r < cols; ++r) {
    if (is_pivot[r]) continue;
    if (!transformed[r].is_zero()) throw std::logic_error("expansion failure: outside span");
  }
  return coef;
}

std::map<BasisIndex, GaussRat> SpLie::bracket(const BasisIndex& a, const BasisIndex& b) const {
  MatC A = realized_[index_of(a)], B = realized_[index_of(b)];
  MatC C = A * B - B * A;
  auto coef = expand(C);
  std::map<BasisIndex, GaussRat> r;
  for (unsigned i = 0; i < basis_.size(); ++i)
    if (!coef[i].is_zero()) r[basis_[i]] = coef[i];
  return r;
}

GaussRat SpLie::bilinear(const BasisIndex& a, const BasisIndex& b) const {
  return (realized_[index_of(a)] * realized_[index_of(b)]).trace() * GaussRat(rat_of(1, 2));
}

std::map<BasisIndex, GaussRat> SpLie::dual(const BasisIndex& a) const {
  unsigned i = index_of(a), d = dim();
  std::map<BasisIndex, GaussRat> r;
  for (unsigned j = 0; j < d; ++j)
    if (!gram_inv_[i][j].is_zero()) r[basis_[j]] = gram_inv_[i][j];
  return r;
}

std::vector<Rat> SpLie::root_of(const BasisIndex& b) const {
  std::vector<Rat> root(m_);
  for (unsigned j = 1; j <= m_; ++j) {
    auto br = bracket(BB(j, j), b);
    if (br.empty()) {
      root[j - 1] = 0;
      continue;
    }
    if (br.size() != 1 || !(br.begin()->first == b) || !br.begin()->second.is_real())
      throw std::logic_error("not a root vector for the diagonal Cartan");
    root[j - 1] = br.begin()->second.re;
  }
  return root;
}

}  // namespace holoproj
