#include "holoproj/spectral.hpp"

#include <algorithm>
#include <sstream>

namespace holoproj {

const char* root_name(RootLabel r) {
  switch (r) {
    case RootLabel::A1: return "alpha1";
    case RootLabel::A2: return "alpha2";
    case RootLabel::A1A2: return "alpha1+alpha2";
    case RootLabel::A1A2A2: return "alpha1+2alpha2";
  }
  return "?";
}

SpectralLine make_line(RootLabel root, const Rat& c) {
  if (c < 0 || c > 1) throw std::domain_error("residue parameter outside [0,1]");
  return SpectralLine{root, c};
}

std::array<Rat, 2> SpectralLine::base() const {
  Rat h = c / 2;
  switch (root) {
    case RootLabel::A1: return {Rat(0), 2 * h};
    case RootLabel::A2: return {h, -h};
    case RootLabel::A1A2: return {h, h};
    case RootLabel::A1A2A2: return {2 * h, Rat(0)};
  }
  return {Rat(0), Rat(0)};
}

std::array<Rat, 2> SpectralLine::dir() const {
  switch (root) {
    case RootLabel::A1: return {Rat(1), Rat(0)};
    case RootLabel::A2: return {Rat(1), Rat(1)};
    case RootLabel::A1A2: return {Rat(1), Rat(-1)};
    case RootLabel::A1A2A2: return {Rat(0), Rat(1)};
  }
  return {Rat(0), Rat(0)};
}

std::string LocusResult::describe() const {
  std::ostringstream os;
  switch (kind) {
    case LocusKind::Empty: os << "empty"; break;
    case LocusKind::FullLine: os << "full line at var = " << at; break;
    case LocusKind::TwoPoints: os << "two points at Re var = " << at; break;
  }
  return os.str();
}

LocusResult intersect_zero_locus(const SpectralLine& line, CenterSign which) {
  // linear functionals whose product is the factored center element
  std::vector<std::array<Rat, 2>> funcs;
  if (which == CenterSign::Plus)
    funcs = {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
  else
    funcs = {{Rat(1), Rat(1)}, {Rat(-1), Rat(-1)}, {Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}};
  auto base = line.base(), dir = line.dir();
  std::vector<Rat> full, points;
  for (auto& f : funcs) {
    Rat fb = f[0] * base[0] + f[1] * base[1];
    Rat fd = f[0] * dir[0] + f[1] * dir[1];
    if (fb <= 0) continue;  // restricted to Re var > 0
    if (fd == 0)
      full.push_back(fb);
    else
      points.push_back(fb);
  }
  LocusResult r;
  if (!full.empty()) {
    r.kind = LocusKind::FullLine;
    r.at = full.front();
    for (auto& v : full)
      if (v != r.at) throw std::logic_error("inconsistent full-line values");
  } else if (!points.empty()) {
    r.kind = LocusKind::TwoPoints;
    r.at = points.front();
    for (auto& v : points)
      if (v != r.at) throw std::logic_error("inconsistent point values");
  }
  return r;
}

Region Region::quadrant(const Rat& a, const Rat& b) {
  Region r;
  r.corners_.emplace_back(a, b);
  return r;
}

void Region::canonicalize() {
  std::vector<std::pair<Rat, Rat>> keep;
  for (auto& c : corners_) {
    bool dominated = false;
    for (auto& o : corners_) {
      if (o == c) continue;
      if (o.first <= c.first && o.second <= c.second) {
        // strict domination, or an identical duplicate handled below
        if (o.first < c.first || o.second < c.second) {
          dominated = true;
          break;
        }
      }
    }
    if (!dominated && std::find(keep.begin(), keep.end(), c) == keep.end()) keep.push_back(c);
  }
  std::sort(keep.begin(), keep.end());
  corners_ = std::move(keep);
}

Region Region::unite(const Region& o) const {
  Region r = *this;
  r.corners_.insert(r.corners_.end(), o.corners_.begin(), o.corners_.end());
  r.canonicalize();
  return r;
}

Region Region::intersect(const Region& o) const {
  Region r;
  for (auto& a : corners_)
    for (auto& b : o.corners_)
      r.corners_.emplace_back(std::max(a.first, b.first), std::max(a.second, b.second));
  r.canonicalize();
  return r;
}

bool Region::contains(const Rat& u, const Rat& v) const {
  for (auto& c : corners_)
    if (u > c.first && v > c.second) return true;
  return false;
}

std::string Region::str() const {
  if (corners_.empty()) return "empty";
  std::ostringstream os;
  bool first = true;
  for (auto& c : corners_) {
    if (!first) os << " u ";
    first = false;
    os << "{Re u > " << c.first << ", Re v > " << c.second << "}";
  }
  return os.str();
}

Region convergence_cone(unsigned m, long kappa) {
  if (m != 2) throw std::domain_error("(u,v) coordinates are a genus-two convention");
  // Re(2 s2 + kappa) > 2m and Re((2/m) s1 + 2 s2 + kappa) > 2m with
  // s1 = (v-2u-1)/2, s2 = (u-(kappa-m))/2 reduce to u > m and v > 2m+1;
  // kappa cancels.
  (void)kappa;
  return Region::quadrant(Rat(long(m)), Rat(2 * long(m) + 1));
}

Region shift_closure(const std::vector<std::pair<long, long>>& shifts, const Region& target) {
  if (shifts.empty()) return target;
  bool first = true;
  Region acc;
  for (auto& s : shifts) {
    Region moved;
    for (auto& c : target.corners()) {
      Region q = Region::quadrant(c.first - Rat(s.first), c.second - Rat(s.second));
      moved = moved.unite(q);
    }
    acc = first ? moved : acc.intersect(moved);
    first = false;
  }
  if (acc.is_empty()) throw std::logic_error("inconsistent shifts produced an empty region");
  return acc;
}

Region continuation_region(const Region& start,
                           const std::vector<std::pair<long, long>>& plus_shifts,
                           const std::vector<std::pair<long, long>>& minus_shifts,
                           const Rat& plus_bound, const Rat& minus_bound) {
  Region X = start;
  for (int iter = 0; iter < 64; ++iter) {
    Region before = X;
    Region p = shift_closure(plus_shifts, X);
    Region pc;
    for (auto& c : p.corners())
      pc = pc.unite(Region::quadrant(std::max(c.first, plus_bound), c.second));
    X = X.unite(pc);
    Region q = shift_closure(minus_shifts, X);
    Region qc;
    for (auto& c : q.corners())
      qc = qc.unite(Region::quadrant(c.first, std::max(c.second, minus_bound)));
    X = X.unite(qc);
    if (X == before) return X;
  }
  throw std::logic_error("continuation iteration did not stabilize");
}

ResolventReport resolvent_domain(CenterSign which, const std::vector<Rat>& c_values) {
  ResolventReport rep;
  rep.domain_bound = 0;  // the two-dimensional continuous spectrum forces Re > 0
  rep.notes.push_back("bound 0 from the two-dimensional continuous component");
  std::vector<Rat> pole_candidates;
  for (auto& c : c_values) {
    for (RootLabel r : {RootLabel::A1, RootLabel::A2, RootLabel::A1A2, RootLabel::A1A2A2}) {
      LocusResult loc = intersect_zero_locus(make_line(r, c), which);
      if (loc.kind == LocusKind::TwoPoints) {
        if (loc.at > rep.domain_bound) rep.domain_bound = loc.at;
        rep.notes.push_back(std::string("blocking line Re var = ") + rat_str(loc.at) +
                            " from " + root_name(r));
      } else if (loc.kind == LocusKind::FullLine) {
        pole_candidates.push_back(loc.at);
        rep.notes.push_back(std::string("order-one pole candidate var = ") + rat_str(loc.at) +
                            " from " + root_name(r));
      }
    }
  }
  for (auto& p : pole_candidates)
    if (p > rep.domain_bound &&
        std::find(rep.poles.begin(), rep.poles.end(), p) == rep.poles.end())
      rep.poles.push_back(p);
  std::sort(rep.poles.begin(), rep.poles.end());
  return rep;
}

EliminationChain printed_chain() { return {Rat(9), Rat(-8), Rat(45), Rat(-16), Rat(256), Rat(192)}; }
EliminationChain derived_chain() { return {Rat(9), Rat(-8), Rat(25), Rat(-16), Rat(128), Rat(192)}; }

EliminationReport lambda_elimination(const EliminationChain& ch) {
  EliminationReport rep;
  // gamma(D-(5)) on Lambda = (2, sqrt(x)):  ((x-21)^2 - 16x) = (x-9)(x-49)
  // chain: gammaDminus(x) b1 b2 = c3 (x-a1)(x-a2) + d3 b2 (x-a1)
  auto gD = [](const Rat& x) -> Rat { return (x - 21) * (x - 21) - 16 * x; };
  // quadratic P(x) = gD(x) b1 b2 - c3 (x-a1)(x-a2) - d3 b2 (x-a1)
  Rat A = ch.b1 * ch.b2 - ch.c3;
  Rat B = Rat(-58) * ch.b1 * ch.b2 + ch.c3 * (ch.a1 + ch.a2) - ch.d3 * ch.b2;
  Rat C = Rat(441) * ch.b1 * ch.b2 - ch.c3 * ch.a1 * ch.a2 + ch.d3 * ch.b2 * ch.a1;
  if (A == 0 && B == 0 && C == 0) {
    rep.tautological = true;
    return rep;
  }
  std::vector<Rat> roots;
  if (A == 0) {
    if (B != 0) roots.push_back(-C / B);
  } else {
    Rat disc = B * B - 4 * A * C;
    if (disc >= 0) {
      // exact square root over Q if it exists
      mpz_class num = disc.get_num(), den = disc.get_den();
      mpz_class sn, sd;
      mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
      if (sn * sn == num && sd * sd == den) {
        Rat s(sn, sd);
        s.canonicalize();
        roots.push_back((-B + s) / (2 * A));
        roots.push_back((-B - s) / (2 * A));
      } else {
        rep.rejections.push_back("irrational solutions for Lambda_2^2");
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  rep.solutions_x = roots;
  for (auto& x : roots) {
    // sanity: verify against the chain
    if (gD(x) * ch.b1 * ch.b2 != ch.c3 * (x - ch.a1) * (x - ch.a2) + ch.d3 * ch.b2 * (x - ch.a1))
      throw std::logic_error("root does not satisfy the chain");
    bool integer_sq = false;
    Rat lam2;
    if (x.get_den() == 1 && x >= 0) {
      mpz_class n = x.get_num(), s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      if (s * s == n) {
        integer_sq = true;
        lam2 = Rat(s);
      }
    }
    bool eisenstein_ok = (Rat(4) + x) <= 5;  // |Lambda|^2 <= |delta|^2 = 5
    if (integer_sq) {
      rep.accepted_lambda2.push_back(lam2);
    } else {
      std::ostringstream os;
      os << "Lambda_2^2 = " << x << ": not an integer square (no discrete-series match)";
      if (!eisenstein_ok)
        os << "; |Lambda|^2 = " << (Rat(4) + x) << " > 5 (outside the Eisenstein bound)";
      rep.rejections.push_back(os.str());
    }
  }
  return rep;
}

}  // namespace holoproj
