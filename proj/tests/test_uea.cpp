#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holoproj/uea.hpp"

using namespace holoproj;

namespace {

// the quadratic corollary display: C1 = (1/2)(tr E+E- + tr E-E+) + tr BB
UEA::Elem C1_display(const UEA& U) {
  auto Ep = U.mat_Eplus(), Em = U.mat_Eminus(), B = U.mat_B();
  UEA::Elem half_sum =
      U.scale(U.add(U.trace_prod({Ep, Em}), U.trace_prod({Em, Ep})), PQ(1, 2));
  return U.add(half_sum, U.trace_prod({B, B}));
}

UEA::Elem anticomm_sum(const UEA& U) {
  unsigned m = U.lie().m();
  UEA::Elem acc;
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = 1; j <= m; ++j)
      for (unsigned k = 1; k <= m; ++k)
        for (unsigned l = 1; l <= m; ++l) {
          UEA::Elem ep = U.letter(EP(k, l)), em = U.letter(EM(i, j));
          UEA::Elem anti = U.add(U.mul(ep, em), U.mul(em, ep));
          acc = U.add(acc, U.mul(U.mul(anti, U.letter(BB(k, j))), U.letter(BB(l, i))));
        }
  return acc;
}

// the quartic corollary display for C2
UEA::Elem C2_display(const UEA& U) {
  unsigned m = U.lie().m();
  auto Ep = U.mat_Eplus(), Em = U.mat_Eminus(), B = U.mat_B(), Bs = U.mat_Bstar();
  UEA::Elem quartic = U.add(U.trace_prod({Ep, Em, Ep, Em}), U.trace_prod({Em, Ep, Em, Ep}));
  quartic = U.add(quartic, U.add(U.trace_prod({B, B, B, B}), U.trace_prod({Bs, Bs, Bs, Bs})));
  UEA::Elem acc = U.scale(quartic, PQ(1, 2));
  acc = U.add(acc, U.scale(U.add(U.trace_prod({Ep, Em, Bs, Bs}), U.trace_prod({Em, Ep, B, B})),
                           PC(2)));
  acc = U.sub(acc, anticomm_sum(U));
  Poly c = PQ(long((m + 1) * (m + 1)), 2);
  acc = U.add(acc, U.scale(U.add(U.trace_prod({Ep, Em}), U.trace_prod({Em, Ep})), c));
  return acc;
}

// D4 as displayed: quartic traces plus cyclic sums of the three mixed words
UEA::Elem D4_display(const UEA& U) {
  auto Ep = U.mat_Eplus(), Em = U.mat_Eminus(), B = U.mat_B(), Bs = U.mat_Bstar();
  UEA::Elem acc = U.add(U.trace_prod({Ep, Em, Ep, Em}), U.trace_prod({Em, Ep, Em, Ep}));
  acc = U.add(acc, U.add(U.trace_prod({B, B, B, B}), U.trace_prod({Bs, Bs, Bs, Bs})));
  std::vector<std::vector<UEA::MatU>> words = {
      {Ep, Em, Bs, B}, {Em, Ep, B, Bs}, {Ep, B, Em, Bs}};
  for (auto& w : words)
    for (unsigned rot = 0; rot < 4; ++rot) {
      std::vector<UEA::MatU> cyc;
      for (unsigned k = 0; k < 4; ++k) cyc.push_back(w[(k + rot) % 4]);
      acc = U.add(acc, U.trace_prod(cyc));
    }
  return acc;
}

}  // namespace

TEST_CASE("pbw rewriting basics") {
  UEA U(2);
  SUBCASE("E-11 * E+11 = E+11 E-11 + 4 B11") {
    auto lhs = U.mul(U.letter(EM(1, 1)), U.letter(EP(1, 1)));
    UEA::Elem expect;
    auto t1 = U.normal_form({EP(1, 1), EM(1, 1)}, PC(1));
    auto t2 = U.normal_form({BB(1, 1)}, PC(4));
    expect = U.add(t1, t2);
    CHECK(lhs == expect);
  }
  SUBCASE("commuting Cartan pair stays put") {
    auto w = U.normal_form({BB(1, 1), BB(2, 2)}, PC(1));
    REQUIRE(w.terms().size() == 1);
    CHECK(w.terms().begin()->first == Word{BB(1, 1), BB(2, 2)});
  }
  SUBCASE("empty word is the unit") {
    CHECK(U.normal_form({}, PC(1)) == U.one());
  }
  SUBCASE("idempotent on canonical input") {
    auto w = U.normal_form({EP(1, 2), BB(1, 1), EM(2, 2)}, PC(1));
    for (auto& [word, c] : w.terms()) CHECK(U.normal_form(word, c) == U.normal_form(word, c));
  }
}

TEST_CASE("normal form is linear and degree non-increasing") {
  UEA U(2);
  std::mt19937 rng(4242);
  const auto& basis = U.lie().basis();
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> len(0, 4), coef(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    Word w1, w2;
    int n1 = len(rng), n2 = len(rng);
    for (int i = 0; i < n1; ++i) w1.push_back(basis[pick(rng)]);
    for (int i = 0; i < n2; ++i) w2.push_back(basis[pick(rng)]);
    Poly c1 = PC(coef(rng)), c2 = PC(coef(rng));
    auto sum = U.add(U.normal_form(w1, c1), U.normal_form(w2, c2));
    // one more normal form pass changes nothing
    UEA::Elem again;
    for (auto& [w, c] : sum.terms()) again = U.add(again, U.normal_form(w, c));
    CHECK(again == sum);
    CHECK(U.normal_form(w1, c1).degree() <= w1.size());
  }
}

TEST_CASE("quadratic casimir matches its displayed form") {
  for (unsigned m : {1u, 2u}) {
    UEA U(m);
    auto Ep = U.mat_Eplus(), Em = U.mat_Eminus(), B = U.mat_B(), Bs = U.mat_Bstar();
    UEA::Elem D2_display = U.add(U.add(U.trace_prod({Ep, Em}), U.trace_prod({Em, Ep})),
                                 U.add(U.trace_prod({B, B}), U.trace_prod({Bs, Bs})));
    CHECK(U.casimir(2) == D2_display);
    CHECK(U.C1() == C1_display(U));
  }
}

TEST_CASE("rearranged trace identity with the (m+1) tr B term") {
  for (unsigned m : {1u, 2u}) {
    UEA U(m);
    auto Ep = U.mat_Eplus(), Em = U.mat_Eminus(), B = U.mat_B();
    UEA::Elem lhs =
        U.scale(U.add(U.trace_prod({Ep, Em}), U.trace_prod({Em, Ep})), PQ(1, 2));
    UEA::Elem rhs = U.add(U.trace_prod({Ep, Em}),
                          U.scale(U.mat_trace(B), PC(long(m) + 1)));
    auto rep = U.verify_identity(lhs, rhs);
    CHECK(rep.equal);
  }
}

TEST_CASE("quartic rearranged trace identity with the (m+2)/2 term") {
  UEA U(2);
  unsigned m = 2;
  auto Ep = U.mat_Eplus(), Em = U.mat_Eminus(), B = U.mat_B(), Bs = U.mat_Bstar();
  UEA::Elem lhs = U.scale(
      U.add(U.trace_prod({Ep, Em, Ep, Em}), U.trace_prod({Em, Ep, Em, Ep})), PQ(1, 2));
  UEA::Elem rhs = U.trace_prod({Ep, Em, Ep, Em});
  rhs = U.add(rhs, U.mul(U.scale(U.add(U.trace_prod({Ep, Em}), U.trace_prod({Em, Ep})),
                                 PQ(1, 2)),
                         U.mat_trace(B)));
  rhs = U.add(rhs, U.scale(U.add(U.trace_prod({Ep, Em, Bs}), U.trace_prod({Em, Ep, B})),
                           PQ(long(m) + 2, 2)));
  auto rep = U.verify_identity(lhs, rhs);
  CHECK(rep.equal);
}

TEST_CASE("quartic casimir against the rearranged display") {
  UEA U(2);
  auto d4 = U.casimir(4);
  CHECK(U.C2() == C2_display(U));
  CHECK(U.sub(d4, U.scale(C2_display(U), PC(2))).is_zero());
  // The cyclic-orbit form of the quartic element (the source its rearranged
  // display is derived from) does not reproduce the invariant-definition sum;
  // the checks layer reports it as a flagged discrepancy. Pin that here so a
  // silent change in either construction is noticed.
  CHECK_FALSE(U.sub(d4, D4_display(U)).is_zero());
}

TEST_CASE("unequal elements report their difference") {
  UEA U(2);
  auto x = U.letter(EP(1, 2));
  auto rep = U.verify_identity(x, U.add(x, U.letter(BB(1, 1))));
  CHECK_FALSE(rep.equal);
  CHECK(rep.difference == U.scale(U.letter(BB(1, 1)), PC(-1)));
}

TEST_CASE("casimir elements are central") {
  UEA U(2);
  auto d2 = U.casimir(2), d4 = U.casimir(4);
  for (auto& b : U.lie().basis()) {
    CHECK(U.commutator(d2, U.letter(b)).is_zero());
    CHECK(U.commutator(d4, U.letter(b)).is_zero());
  }
}

TEST_CASE("quadratic casimir is independent of the chosen basis") {
  UEA U(2);
  unsigned d = U.lie().dim();
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-2, 2);
  // unit upper-triangular times unit lower-triangular: invertible over Q
  std::vector<std::vector<Rat>> up(d, std::vector<Rat>(d, 0)), lo(d, std::vector<Rat>(d, 0));
  for (unsigned i = 0; i < d; ++i) {
    up[i][i] = 1;
    lo[i][i] = 1;
    for (unsigned j = i + 1; j < d; ++j) up[i][j] = entry(rng);
    for (unsigned j = 0; j < i; ++j) lo[i][j] = entry(rng);
  }
  std::vector<std::vector<Rat>> ch(d, std::vector<Rat>(d, 0));
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j)
      for (unsigned k = 0; k < d; ++k) ch[i][j] += lo[i][k] * up[k][j];
  CHECK(U.casimir_from_basis(2, ch) == U.casimir(2));
}
