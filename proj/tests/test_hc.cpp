#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holoproj/harish_chandra.hpp"

using namespace holoproj;

static const UEA& U2() {
  static UEA u(2);
  return u;
}
static const HarishChandra& HC2() {
  static HarishChandra hc(U2());
  return hc;
}

TEST_CASE("rho-shift is computed from the positive system") {
  CHECK(HC2().delta() == std::vector<Rat>{Rat(2), Rat(1)});
  UEA u1(1);
  HarishChandra hc1(u1);
  CHECK(hc1.delta() == std::vector<Rat>{Rat(1)});
}

TEST_CASE("gamma images of the casimir elements") {
  Poly b1 = PV(VB11), b2 = PV(VB22);
  Poly g1 = HC2().gamma(U2().C1());
  CHECK(g1 == b1 * b1 + b2 * b2 - PC(5));
  Poly g2 = HC2().gamma(U2().C2());
  CHECK(g2 == b1.pow(4) + b2.pow(4) - PC(17) + PC(3) * g1);
  CHECK(HC2().gamma(U2().one()) == PC(1));
}

TEST_CASE("gamma images are Weyl invariant") {
  CHECK(HC2().weyl_invariant(HC2().gamma(U2().C1())));
  CHECK(HC2().weyl_invariant(HC2().gamma(U2().C2())));
}

TEST_CASE("infinitesimal character evaluations") {
  auto ev = [&](long a, long b, const UEA::Elem& x) {
    Poly p = HC2().eval_inf_char(PC(a), PC(b), x);
    REQUIRE(p.is_constant());
    return p.constant_term();
  };
  CHECK(ev(2, 1, U2().C1()) == RingElem(0));
  CHECK(ev(2, 1, U2().C2()) == RingElem(0));
  CHECK(ev(0, 0, U2().C1()) == RingElem(-5));
  CHECK(ev(2, 3, U2().C1()) == RingElem(8));
  CHECK(ev(2, 3, U2().C2()) == RingElem(104));
}

TEST_CASE("gamma is multiplicative on the center") {
  auto prod = U2().mul(U2().C1(), U2().C2());
  CHECK(HC2().gamma(prod) == HC2().gamma(U2().C1()) * HC2().gamma(U2().C2()));
}

TEST_CASE("coroot factorizations of the center elements") {
  auto rep = HC2().factorization_check();
  CHECK(rep.plus_ok);
  CHECK(rep.minus_ok);
}

TEST_CASE("D+(2) vanishes on the line Lambda = (2, t)") {
  Poly val = HC2().eval_inf_char(PC(2), PV(VT), U2().center_plus());
  CHECK(val.substitute({{VU, PC(2)}}).is_zero());
}

TEST_CASE("limit identity D+(2) = D+(u) + (u^2-4)(C1 - (u^2-1))") {
  const UEA& U = U2();
  Poly u2 = PV(VU) * PV(VU);
  auto dplus_at_2 = [&] {
    UEA::Elem e = U.center_plus();
    UEA::Elem out;
    for (auto& [w, c] : e.terms()) {
      UEA::Elem t = U.normal_form(w, c.substitute({{VU, PC(2)}}));
      out = U.add(out, t);
    }
    return out;
  }();
  UEA::Elem rhs = U.center_plus();
  UEA::Elem corr = U.sub(U.C1(), U.scale(U.one(), u2 - PC(1)));
  rhs = U.add(rhs, U.scale(corr, u2 - PC(4)));
  auto rep = U.verify_identity(dplus_at_2, rhs);
  CHECK(rep.equal);
}

TEST_CASE("negative-variable substitution identity for D-") {
  // gamma(D-(v)) at (i t1, i t2) = ((t1+t2)^2 + v^2)((t1-t2)^2 + v^2)
  Poly gm = HC2().factorization_check().gamma_minus;
  Poly it1 = PI_() * PV(VL1), it2 = PI_() * PV(VL2);
  Poly lhs = gm.substitute({{VL1, it1}, {VL2, it2}});
  Poly v = PV(VV);
  Poly rhs = ((PV(VL1) + PV(VL2)).pow(2) + v * v) * ((PV(VL1) - PV(VL2)).pow(2) + v * v);
  CHECK(lhs == rhs);
}

TEST_CASE("common zeros of the casimir pair are the eight Weyl points") {
  auto zeros = HC2().common_zeros_C1_C2();
  REQUIRE(zeros.size() == 8);
  std::vector<std::pair<Rat, Rat>> expect;
  for (long a : {-2, -1, 1, 2})
    for (long b : {-2, -1, 1, 2})
      if ((a * a == 4 && b * b == 1) || (a * a == 1 && b * b == 4))
        expect.emplace_back(Rat(a), Rat(b));
  std::sort(expect.begin(), expect.end());
  CHECK(zeros == expect);
}

TEST_CASE("resultant and rational roots machinery") {
  // resultant of x^2+y^2-5 and x*y-2 in x is y^4 - 5 y^2 + 4
  Poly p = PV(VL1) * PV(VL1) + PV(VL2) * PV(VL2) - PC(5);
  Poly q = PV(VL1) * PV(VL2) - PC(2);
  Poly r = resultant(p, q, VL1);
  Poly expect = PV(VL2).pow(4) - PC(5) * PV(VL2).pow(2) + PC(4);
  CHECK(r == expect);
  auto roots = rational_roots(expect, VL2);
  CHECK(roots == std::vector<Rat>{Rat(-2), Rat(-1), Rat(1), Rat(2)});
}
