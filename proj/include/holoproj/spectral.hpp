#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holoproj/rational.hpp"

namespace holoproj {

// Exact zero-locus geometry of the factored center elements on the
// one-dimensional continuous-parameter lines, and the region algebra for
// the convergence and continuation cones.

enum class RootLabel { A1, A2, A1A2, A1A2A2 };  // alpha1, alpha2, a1+a2, a1+2a2
const char* root_name(RootLabel r);

struct SpectralLine {
  RootLabel root;
  Rat c;  // residue parameter, 0 <= c <= 1
  // base + i t * dir, both rational vectors
  std::array<Rat, 2> base() const;
  std::array<Rat, 2> dir() const;
};

SpectralLine make_line(RootLabel root, const Rat& c);

enum class LocusKind { Empty, FullLine, TwoPoints };

struct LocusResult {
  LocusKind kind = LocusKind::Empty;
  // FullLine: the whole line at var = at;
  // TwoPoints: the pair base +- i y dir at var = at + i y
  Rat at;
  std::string describe() const;
};

enum class CenterSign { Plus, Minus };

// intersection of the line with the zero set of D+(u, .) or D-(v, .),
// classified for Re var > 0
LocusResult intersect_zero_locus(const SpectralLine& line, CenterSign which);

// ---- region algebra ----

// Finite unions of open quadrants {Re u > a, Re v > b}; canonical form keeps
// only non-dominated corners.
class Region {
 public:
  Region() = default;
  static Region quadrant(const Rat& a, const Rat& b);
  static Region empty() { return Region(); }

  bool is_empty() const { return corners_.empty(); }
  const std::vector<std::pair<Rat, Rat>>& corners() const { return corners_; }

  Region unite(const Region& o) const;
  Region intersect(const Region& o) const;
  bool contains(const Rat& u, const Rat& v) const;
  bool operator==(const Region& o) const { return corners_ == o.corners_; }
  std::string str() const;

 private:
  void canonicalize();
  std::vector<std::pair<Rat, Rat>> corners_;
};

// cone of absolute convergence in (u, v) coordinates for genus m, weight kappa
Region convergence_cone(unsigned m, long kappa);

// largest X with X + shift inside target for every shift
Region shift_closure(const std::vector<std::pair<long, long>>& shifts, const Region& target);

// iterated continuation region from the two resolvent domains
Region continuation_region(const Region& start,
                           const std::vector<std::pair<long, long>>& plus_shifts,
                           const std::vector<std::pair<long, long>>& minus_shifts,
                           const Rat& plus_bound, const Rat& minus_bound);

// ---- resolvent domains ----

struct ResolventReport {
  Rat domain_bound;             // Re var > bound
  std::vector<Rat> poles;       // order-one poles inside the domain
  std::vector<std::string> notes;
};

ResolventReport resolvent_domain(CenterSign which, const std::vector<Rat>& c_values);

// ---- the spectral-parameter elimination of the continuation endgame ----

struct EliminationReport {
  // chain constants (x = Lambda_2^2): (x - a1) L1 = b1 pi L2,
  // (x - a2) L2 = b2 pi L3, gammaDminus(x) L1 = c3 pi^2 L3 + d3 pi L2
  bool tautological = false;          // chain closes identically
  std::vector<Rat> solutions_x;       // roots for Lambda_2^2 otherwise
  std::vector<Rat> accepted_lambda2;  // after both rejection filters
  std::vector<std::string> rejections;
};

struct EliminationChain {
  Rat a1, b1, a2, b2, c3, d3;
};

// the chain constants as printed in the source proof, and as re-derived
EliminationChain printed_chain();
EliminationChain derived_chain();

EliminationReport lambda_elimination(const EliminationChain& chain);

}  // namespace holoproj
