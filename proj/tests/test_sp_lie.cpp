#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holoproj/sp_lie.hpp"

using namespace holoproj;

TEST_CASE("realized basis satisfies the symplectic membership relation") {
  for (unsigned m : {1u, 2u}) {
    SpLie g(m);
    for (auto& b : g.basis()) CHECK(g.in_symplectic(g.realize(b)));
  }
}

TEST_CASE("realize B(1,1) for m=2") {
  SpLie g(2);
  MatC b = g.realize(BB(1, 1));
  // [[0, i e11], [-i e11, 0]] in block form
  GaussRat i = GaussRat::i();
  CHECK(b.at(0, 2) == i);
  CHECK(b.at(2, 0) == -i);
  CHECK(b.at(0, 0).is_zero());
  CHECK(b.at(1, 3).is_zero());
  CHECK(b.at(3, 1).is_zero());
}

TEST_CASE("realize Eplus(1,1): blocks [[X, iX], [iX, -X]] with X = e11") {
  SpLie g(2);
  MatC e = g.realize(EP(1, 1));
  GaussRat i = GaussRat::i();
  CHECK(e.at(0, 0) == GaussRat(1));
  CHECK(e.at(0, 2) == i);
  CHECK(e.at(2, 0) == i);
  CHECK(e.at(2, 2) == GaussRat(-1));
  CHECK(e.at(1, 1).is_zero());
}

TEST_CASE("bracket relations") {
  SpLie g(2);
  SUBCASE("[B11, E-11] = 2 E-11 (root (2,0))") {
    auto br = g.bracket(BB(1, 1), EM(1, 1));
    REQUIRE(br.size() == 1);
    CHECK(br.begin()->first == EM(1, 1));
    CHECK(br.begin()->second == GaussRat(2));
  }
  SUBCASE("Cartan elements commute") {
    CHECK(g.bracket(BB(1, 1), BB(2, 2)).empty());
  }
  SUBCASE("[E-11, E+11] = 4 B11") {
    auto br = g.bracket(EM(1, 1), EP(1, 1));
    REQUIRE(br.size() == 1);
    CHECK(br.begin()->first == BB(1, 1));
    CHECK(br.begin()->second == GaussRat(4));
  }
}

TEST_CASE("root table for the chosen positive system") {
  SpLie g(2);
  auto eq = [](const std::vector<Rat>& r, long a, long b) {
    return r.size() == 2 && r[0] == a && r[1] == b;
  };
  CHECK(eq(g.root_of(BB(1, 2)), 1, -1));
  CHECK(eq(g.root_of(EM(1, 1)), 2, 0));
  CHECK(eq(g.root_of(EM(1, 2)), 1, 1));
  CHECK(eq(g.root_of(EM(2, 2)), 0, 2));
}

TEST_CASE("bilinear form values and duals") {
  SpLie g(2);
  CHECK(g.bilinear(EP(1, 1), EM(1, 1)) == GaussRat(2));
  SUBCASE("dual(E+12) = E-12") {
    auto d = g.dual(EP(1, 2));
    REQUIRE(d.size() == 1);
    CHECK(d.begin()->first == EM(1, 2));
    CHECK(d.begin()->second == GaussRat(1));
  }
  SUBCASE("dual(E+11) = (1/2) E-11") {
    auto d = g.dual(EP(1, 1));
    REQUIRE(d.size() == 1);
    CHECK(d.begin()->first == EM(1, 1));
    CHECK(d.begin()->second == GaussRat(rat_of(1, 2)));
  }
  SUBCASE("dual(B_kl) = B_lk") {
    auto d = g.dual(BB(1, 2));
    REQUIRE(d.size() == 1);
    CHECK(d.begin()->first == BB(2, 1));
    CHECK(d.begin()->second == GaussRat(1));
  }
}

TEST_CASE("duality holds across the full basis") {
  for (unsigned m : {1u, 2u}) {
    SpLie g(m);
    for (auto& a : g.basis()) {
      auto da = g.dual(a);
      for (auto& b : g.basis()) {
        GaussRat acc;
        for (auto& [c, s] : da) acc = acc + s * g.bilinear(b, c);
        CHECK(acc == (a == b ? GaussRat(1) : GaussRat(0)));
      }
    }
  }
}

TEST_CASE("antisymmetry and Jacobi identity on all basis triples") {
  SpLie g(2);
  auto as_elem = [&](const std::map<BasisIndex, GaussRat>& mp) {
    MatC acc(4);
    for (auto& [b, c] : mp) {
      MatC mb = g.realize(b);
      for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) acc.at(i, j) = acc.at(i, j) + c * mb.at(i, j);
    }
    return acc;
  };
  auto comm = [](const MatC& a, const MatC& b) { return a * b - b * a; };
  for (auto& x : g.basis()) {
    CHECK(g.bracket(x, x).empty());
    for (auto& y : g.basis()) {
      // bracket re-realizes to the matrix commutator
      MatC lhs = as_elem(g.bracket(x, y));
      CHECK((lhs - comm(g.realize(x), g.realize(y))).is_zero());
      MatC neg = as_elem(g.bracket(y, x));
      CHECK((lhs + neg).is_zero());
      for (auto& z : g.basis()) {
        MatC j1 = comm(g.realize(x), comm(g.realize(y), g.realize(z)));
        MatC j2 = comm(g.realize(y), comm(g.realize(z), g.realize(x)));
        MatC j3 = comm(g.realize(z), comm(g.realize(x), g.realize(y)));
        CHECK((j1 + j2 + j3).is_zero());
      }
    }
  }
}

TEST_CASE("invariance of the bilinear form") {
  SpLie g(2);
  auto B = [&](const std::map<BasisIndex, GaussRat>& x, const BasisIndex& z) {
    GaussRat acc;
    for (auto& [b, c] : x) acc = acc + c * g.bilinear(b, z);
    return acc;
  };
  for (auto& x : g.basis())
    for (auto& y : g.basis())
      for (auto& z : g.basis()) {
        GaussRat lhs = B(g.bracket(x, y), z) + B(g.bracket(x, z), y);
        CHECK(lhs.is_zero());
      }
}
