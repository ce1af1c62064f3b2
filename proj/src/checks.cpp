#include "holoproj/checks.hpp"

#include <random>
#include <sstream>

#include "holoproj/genus1.hpp"
#include "holoproj/harish_chandra.hpp"
#include "holoproj/inequalities.hpp"
#include "holoproj/poincare.hpp"
#include "holoproj/siegel_gamma.hpp"
#include "holoproj/spectral.hpp"
#include "holoproj/sturm.hpp"

namespace holoproj {

namespace {

Poly detT() { return PV(VT11) * PV(VT22) - PV(VT12) * PV(VT12); }
Poly Ppi(unsigned n = 1) { return Poly(RingElem::pi(n)); }

std::string shift_id(const char* op, ShiftKey uv) {
  std::ostringstream os;
  os << "sec6." << op << ".shift_" << uv.first << "_" << uv.second;
  return os.str();
}

Poly tie_uv(const Poly& p) {
  Poly s1 = PV(VS1), s2 = PV(VS2);
  return p.substitute({{VU, PC(2) * s2 + PC(2)}, {VV, PC(2) * s1 + PC(4) * s2 + PC(5)}});
}

void compare_decomposition(Report& rep, const char* op, const ShiftDecomposition& derived,
                           const std::map<ShiftKey, Poly>& printed) {
  std::set<ShiftKey> keys;
  for (auto& [k, c] : derived.coeffs) keys.insert(k);
  for (auto& [k, c] : printed) keys.insert(k);
  for (auto& k : keys) {
    Poly d = tie_uv(derived.at(k.first, k.second));
    auto it = printed.find(k);
    Poly pr = it == printed.end() ? Poly(long(0)) : tie_uv(it->second);
    if (d.is_zero() && it == printed.end()) continue;  // vanishes on the tied line
    auto uv = uv_shift_of(k);
    std::ostringstream st;
    st << op << " action, coefficient of the (u+" << uv.first << ", v+" << uv.second
       << ") translate";
    rep.add_compare(shift_id(op, uv), st.str(), pr.str(), d.str());
  }
}

// chain constants recomputed from the c1 and dminus decompositions
EliminationChain chain_from_suite(const SiegelCalculus::Suite& s) {
  auto line0 = [&](const Poly& c) {  // s1 = 0, s2 = (u-2)/2
    return c.substitute({{VS1, Poly(long(0))}, {VS2, (PV(VU) - PC(2)) * PQ(1, 2)}});
  };
  auto line1 = [&](const Poly& c) {
    return c.substitute({{VS1, PC(1)}, {VS2, (PV(VU) - PC(2)) * PQ(1, 2)}});
  };
  auto at2 = [&](const Poly& c) {
    Poly v = c.substitute({{VU, PC(2)}});
    return v.constant_term().constant().re;
  };
  auto div_u2_at2 = [&](const Poly& c) {
    auto q = c.div_exact(PV(VU) - PC(2));
    if (!q) throw std::logic_error("expected a factor (u-2)");
    return at2(*q);
  };
  EliminationChain ch;
  ch.a1 = Rat(1) + at2(line0(s.c1.at(0, 0)));
  // coefficient of the (u, v+2) translate carries pi to the first power
  auto strip_pi = [&](const Poly& c, unsigned deg) {
    Poly out(kAllVars);
    for (auto& [m, x] : c.terms()) out.add_term(m, x.div_monomial(GaussRat(1), deg));
    return out;
  };
  ch.b1 = div_u2_at2(strip_pi(line0(s.c1.at(1, 0)), 1));
  ch.a2 = Rat(1) + at2(line1(s.c1.at(0, 0)));
  ch.b2 = at2(strip_pi(line1(s.c1.at(1, 0)), 1));
  // D-(2u+1) on s1 = 0: the (u, v+4) and (u, v+2) translates
  auto dline = [&](const Poly& c) {
    return line0(c).substitute({{VV, PC(2) * PV(VU) + PC(1)}});
  };
  ch.c3 = div_u2_at2(strip_pi(dline(s.dminus.at(2, 0)), 2));
  ch.d3 = div_u2_at2(strip_pi(dline(s.dminus.at(1, 0)), 1));
  return ch;
}

}  // namespace

Report checks_algebra(const Suspects& sus) {
  Report rep(sus);
  UEA U(2);
  auto Ep = U.mat_Eplus(), Em = U.mat_Eminus(), B = U.mat_B(), Bs = U.mat_Bstar();

  UEA::Elem d2 = U.casimir(2);
  UEA::Elem d2_display = U.add(U.add(U.trace_prod({Ep, Em}), U.trace_prod({Em, Ep})),
                               U.add(U.trace_prod({B, B}), U.trace_prod({Bs, Bs})));
  rep.add_compare("casimir.d2_display",
                  "D2 = tr(E+E-) + tr(E-E+) + tr(BB) + tr(B*B*)",
                  d2_display.str(), d2.str());

  // C1 corollary display and the rearranged trace identity
  UEA::Elem half_sum =
      U.scale(U.add(U.trace_prod({Ep, Em}), U.trace_prod({Em, Ep})), PQ(1, 2));
  rep.add_compare("casimir.c1_display", "C1 = (1/2)(tr E+E- + tr E-E+) + tr BB",
                  U.add(half_sum, U.trace_prod({B, B})).str(), U.C1().str());
  rep.add_compare("casimir.trace2_rearranged",
                  "(1/2)(tr E+E- + tr E-E+) = tr(E+E-) + (m+1) tr B",
                  half_sum.str(),
                  U.add(U.trace_prod({Ep, Em}), U.scale(U.mat_trace(B), PC(3))).str());

  // quartic rearranged identity
  UEA::Elem lhs4 = U.scale(
      U.add(U.trace_prod({Ep, Em, Ep, Em}), U.trace_prod({Em, Ep, Em, Ep})), PQ(1, 2));
  UEA::Elem rhs4 = U.trace_prod({Ep, Em, Ep, Em});
  rhs4 = U.add(rhs4, U.mul(half_sum, U.mat_trace(B)));
  rhs4 = U.add(rhs4, U.scale(U.add(U.trace_prod({Ep, Em, Bs}), U.trace_prod({Em, Ep, B})),
                             PQ(4, 2)));
  rep.add_compare("casimir.trace4_rearranged",
                  "(1/2)(tr EEEE sums) = tr(E+E-E+E-) + (1/2)(trE+E- + trE-E+)trB + "
                  "((m+2)/2)(tr E+E-B* + tr E-E+B)",
                  lhs4.str(), rhs4.str());

  // C2 corollary display
  UEA::Elem anti;
  for (unsigned i = 1; i <= 2; ++i)
    for (unsigned j = 1; j <= 2; ++j)
      for (unsigned k = 1; k <= 2; ++k)
        for (unsigned l = 1; l <= 2; ++l) {
          UEA::Elem ep = U.letter(EP(k, l)), em = U.letter(EM(i, j));
          UEA::Elem ac = U.add(U.mul(ep, em), U.mul(em, ep));
          anti = U.add(anti, U.mul(U.mul(ac, U.letter(BB(k, j))), U.letter(BB(l, i))));
        }
  UEA::Elem c2_display = U.scale(
      U.add(U.add(U.trace_prod({Ep, Em, Ep, Em}), U.trace_prod({Em, Ep, Em, Ep})),
            U.add(U.trace_prod({B, B, B, B}), U.trace_prod({Bs, Bs, Bs, Bs}))),
      PQ(1, 2));
  c2_display = U.add(
      c2_display,
      U.scale(U.add(U.trace_prod({Ep, Em, Bs, Bs}), U.trace_prod({Em, Ep, B, B})), PC(2)));
  c2_display = U.sub(c2_display, anti);
  c2_display = U.add(c2_display,
                     U.scale(U.add(U.trace_prod({Ep, Em}), U.trace_prod({Em, Ep})), PQ(9, 2)));
  rep.add_compare("casimir.c2_display", "C2 corollary display equals (1/2) D4",
                  c2_display.str(), U.C2().str());

  // the cyclic-orbit form of D4 as printed does not reproduce the sum
  UEA::Elem d4 = U.casimir(4);
  UEA::Elem d4_cyc = U.add(U.trace_prod({Ep, Em, Ep, Em}), U.trace_prod({Em, Ep, Em, Ep}));
  d4_cyc = U.add(d4_cyc, U.add(U.trace_prod({B, B, B, B}), U.trace_prod({Bs, Bs, Bs, Bs})));
  std::vector<std::vector<UEA::MatU>> words = {
      {Ep, Em, Bs, B}, {Em, Ep, B, Bs}, {Ep, B, Em, Bs}};
  for (auto& w : words)
    for (unsigned rot = 0; rot < 4; ++rot) {
      std::vector<UEA::MatU> cyc;
      for (unsigned k = 0; k < 4; ++k) cyc.push_back(w[(k + rot) % 4]);
      d4_cyc = U.add(d4_cyc, U.trace_prod(cyc));
    }
  rep.add_compare("casimir.d4_cyclic_display",
                  "cyclic-orbit display of D4 against the invariant-definition sum",
                  d4_cyc.str(), d4.str(),
                  "mixed-word block differs; the rearranged corollary display is the "
                  "consistent one");

  bool central = true;
  for (auto& b : U.lie().basis())
    central = central && U.commutator(d2, U.letter(b)).is_zero() &&
              U.commutator(d4, U.letter(b)).is_zero();
  rep.add_pass_fail("casimir.centrality", "D2 and D4 commute with all ten generators", central);

  // basis independence of the quadratic element
  unsigned d = U.lie().dim();
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<std::vector<Rat>> up(d, std::vector<Rat>(d, 0)), lo(d, std::vector<Rat>(d, 0)),
      ch(d, std::vector<Rat>(d, 0));
  for (unsigned i = 0; i < d; ++i) {
    up[i][i] = 1;
    lo[i][i] = 1;
    for (unsigned j = i + 1; j < d; ++j) up[i][j] = entry(rng);
    for (unsigned j = 0; j < i; ++j) lo[i][j] = entry(rng);
  }
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j)
      for (unsigned k = 0; k < d; ++k) ch[i][j] += lo[i][k] * up[k][j];
  rep.add_pass_fail("casimir.d2_basis_independent",
                    "D2 is unchanged under a random invertible change of basis",
                    U.casimir_from_basis(2, ch) == d2);
  return rep;
}

Report checks_hc(const Suspects& sus) {
  Report rep(sus);
  UEA U(2);
  HarishChandra hc(U);
  Poly b1 = PV(VB11), b2 = PV(VB22);

  rep.add_compare("hc.delta", "half the positive-root sum equals (2, 1)", "(2,1)",
                  "(" + rat_str(hc.delta()[0]) + "," + rat_str(hc.delta()[1]) + ")");
  Poly g1 = hc.gamma(U.C1());
  rep.add_compare("hc.gamma_C1", "gamma(C1) = B11^2 + B22^2 - 5",
                  (b1 * b1 + b2 * b2 - PC(5)).str(), g1.str());
  Poly g2 = hc.gamma(U.C2());
  rep.add_compare("hc.gamma_C2", "gamma(C2) = B11^4 + B22^4 - 17 + 3 gamma(C1)",
                  (b1.pow(4) + b2.pow(4) - PC(17) + PC(3) * g1).str(), g2.str());
  rep.add_pass_fail("hc.weyl_invariance", "gamma images are invariant under the Weyl group",
                    hc.weyl_invariant(g1) && hc.weyl_invariant(g2));
  rep.add_compare("hc.inf_char_21", "Lambda(C1), Lambda(C2) vanish at (2, 1)", "(0,0)",
                  "(" + hc.eval_inf_char(PC(2), PC(1), U.C1()).str() + "," +
                      hc.eval_inf_char(PC(2), PC(1), U.C2()).str() + ")");
  rep.add_compare("hc.inf_char_23", "Lambda(C1) = 8 and Lambda(C2) = 104 at (2, 3)", "(8,104)",
                  "(" + hc.eval_inf_char(PC(2), PC(3), U.C1()).str() + "," +
                      hc.eval_inf_char(PC(2), PC(3), U.C2()).str() + ")");
  auto fact = hc.factorization_check();
  rep.add_pass_fail("hc.gamma_Dplus", "gamma(D+(u)) = (L1^2-u^2)(L2^2-u^2)", fact.plus_ok);
  rep.add_pass_fail("hc.gamma_Dminus", "gamma(D-(v)) = ((L1+L2)^2-v^2)((L1-L2)^2-v^2)",
                    fact.minus_ok);
  rep.add_pass_fail("hc.gamma_multiplicative", "gamma(C1 C2) = gamma(C1) gamma(C2)",
                    hc.gamma(U.mul(U.C1(), U.C2())) == g1 * g2);

  // D+(2) = D+(u) + (u^2-4)(C1 - (u^2-1)) in the enveloping algebra
  Poly u2 = PV(VU) * PV(VU);
  UEA::Elem dplus_at2;
  for (auto& [w, c] : U.center_plus().terms())
    dplus_at2 = U.add(dplus_at2, U.normal_form(w, c.substitute({{VU, PC(2)}})));
  UEA::Elem rhs = U.add(U.center_plus(),
                        U.scale(U.sub(U.C1(), U.scale(U.one(), u2 - PC(1))), u2 - PC(4)));
  rep.add_pass_fail("hc.dplus_limit_identity", "D+(2) = D+(u) + (u^2-4)(C1 - (u^2-1))",
                    U.verify_identity(dplus_at2, rhs).equal);

  auto zeros = hc.common_zeros_C1_C2();
  std::ostringstream zs;
  for (auto& [x, y] : zeros) zs << "(" << x << "," << y << ")";
  rep.add_compare("hc.common_zeros",
                  "common zeros of the casimir pair are the eight Weyl conjugates of (2,1)",
                  "(-2,-1)(-2,1)(-1,-2)(-1,2)(1,-2)(1,2)(2,-1)(2,1)", zs.str());
  return rep;
}

namespace {

std::map<ShiftKey, Poly> printed_C1() {
  Poly s1 = PV(VS1), s2 = PV(VS2), dt = detT(), pi = Ppi();
  return {
      {{0, 0}, PC(4) * (s1 * s1 + PC(2) * s1 * s2 + PC(2) * s2 * s2 + PC(2) * s1 + PC(5) * s2 +
                        PC(8))},
      {{1, 0}, PC(-16) * pi * (s1 + s2)},
      {{-2, 1}, PC(-8) * dt * s1 * (s1 - PC(1))},
      {{-1, 1}, PC(32) * pi * dt * s1},
  };
}

std::map<ShiftKey, Poly> printed_C2() {
  Poly s1 = PV(VS1), s2 = PV(VS2), dt = detT(), pi = Ppi(), pi2 = Ppi(2);
  return {
      {{0, 0},
       PC(4) * (PC(4) * s1.pow(4) + PC(16) * s1.pow(3) * s2 + PC(24) * s1.pow(3) +
                PC(24) * s1.pow(2) * s2.pow(2) + PC(72) * s1.pow(2) * s2 + PC(57) * s1.pow(2) +
                PC(16) * s1 * s2.pow(3) + PC(72) * s1 * s2.pow(2) + PC(114) * s1 * s2 +
                PC(46) * s1 + PC(8) * s2.pow(4) + PC(40) * s2.pow(3) + PC(84) * s2.pow(2) +
                PC(51) * s2 + PC(26))},
      {{0, 1}, PC(-256) * pi2 * dt * (s1 + s1) * (PC(4) * s1 + PC(2) * s2 + PC(1))},
      {{-1, 1}, PC(32) * pi * dt * s1 *
                    (PC(16) * s1 * s1 + PC(36) * s1 * s2 + PC(30) * s1 + PC(24) * s2 * s2 +
                     PC(40) * s2 + PC(13))},
      {{-2, 1}, PC(-8) * dt * s1 * (s1 - PC(1)) *
                    (PC(8) * s1 * s1 + PC(24) * s1 * s2 + PC(28) * s1 + PC(24) * s2 * s2 +
                     PC(60) * s2 + PC(43))},
      {{-2, 2}, PC(512) * pi2 * dt * dt * s1 * (s1 - PC(1))},
      {{-3, 2}, PC(-256) * pi * dt * dt * s1 * (s1 - PC(1)) * (s1 - PC(2))},
      {{-4, 2}, PC(32) * dt * dt * s1 * (s1 - PC(1)) * (s1 - PC(2)) * (s1 - PC(3))},
      {{1, 0}, PC(-16) * pi * (s1 + s2) * (PC(8) * (s1 + s2) * (s1 + s2 + PC(4)) + PC(37))},
      {{2, 0}, PC(256) * pi2 * (s1 + s2) * (s1 + s2 + PC(1))},
  };
}

std::map<ShiftKey, Poly> printed_Dplus() {
  Poly s1 = PV(VS1), s2 = PV(VS2), dt = detT(), pi = Ppi(), pi2 = Ppi(2);
  Poly u = PV(VU), v = PV(VV);
  return {
      {{-4, 2}, PC(16) * dt * dt * s1 * (s1 - PC(1)) * (s1 - PC(2)) * (s1 - PC(3))},
      {{-3, 2}, PC(-128) * pi * dt * dt * s1 * (s1 - PC(1)) * (s1 - PC(2))},
      {{-2, 2}, PC(256) * pi2 * dt * dt * s1 * (s1 - PC(1))},
      {{-2, 1}, PC(8) * dt * s1 * (s1 - PC(1)) * (u + PC(1)) * (v + PC(1))},
      {{-1, 1}, PC(-182) * dt * s1 *
                    (s1 * s2 + PQ(5, 6) * s1 + PQ(4, 3) * s2.pow(3) + PQ(2, 3) * s2 - PC(2))},
      {{0, 1}, PC(64) * pi2 * dt * (v - u - PC(3)) * (u - PC(3))},
  };
}

std::map<ShiftKey, Poly> printed_Dminus() {
  Poly s1 = PV(VS1), s2 = PV(VS2), dt = detT(), pi = Ppi(), pi2 = Ppi(2);
  Poly u = PV(VU), v = PV(VV);
  return {
      {{2, 0}, PC(512) * pi2 * (s1 + s2) * (s1 + s2 + PC(1))},
      {{1, 0}, PC(64) * pi * (s1 + s2) * (u - PC(1)) * (v + PC(1))},
      {{-1, 1}, PC(128) * pi * dt * s1 * (s1 - PC(3)) * (v + PC(1))},
      {{0, 1}, PC(-1024) * pi2 * dt * (s1 + s2) * (s1 + s2)},
  };
}

}  // namespace

Report checks_calculus(const CheckOptions& opt, const Suspects& sus) {
  Report rep(sus);
  if (opt.genus == 1) {
    SiegelCalculus sc(1);
    Poly s = PV(VS), tau = PV(VT11);
    Poly exp0 = PC(4) * (s * s - PQ(1, 4));
    Poly exp1 = PC(-16) * Ppi() * tau * (s - PQ(1, 2));
    std::map<Var, Poly> to_s{{VKAPPA, PC(2)}, {VS2, s - PQ(1, 2)}};
    auto dec = sc.decompose(sc.reduce_weight(sc.act_C1(sc.seed(), opt.route)));
    rep.add_compare("genus1.zero_shift", "C1 h = 4(s^2-1/4) h(s) + ...",
                    exp0.str(), dec.at(0, 0).substitute(to_s).str());
    rep.add_compare("genus1.plus_shift", "... - 16 pi tau (s-1/2) h(s+1)",
                    exp1.str(), dec.at(0, 1).substitute(to_s).str());
    Genus1Classical cl(2);
    auto res = cl.casimir(cl.seed());
    rep.add_compare("genus1.classical_zero", "classical operator, h(s) coefficient",
                    exp0.str(), res.count(0) ? res.at(0).str() : "0");
    rep.add_compare("genus1.classical_plus", "classical operator, h(s+1) coefficient",
                    exp1.str(), res.count(1) ? res.at(1).str() : "0");
    std::map<Var, RingElem> half{{VS, RingElem(rat_of(1, 2))}, {VT11, RingElem(1)}};
    rep.add_pass_fail("genus1.vanishing_at_half", "both coefficients vanish at s = 1/2",
                      res.at(0).eval(half).is_zero() && res.at(1).eval(half).is_zero());
    return rep;
  }

  SiegelCalculus sc(2);
  SiegelExpr H = sc.seed();

  // route agreement for the trace operators
  rep.add_pass_fail("trace2.routes_agree",
                    "order-2 trace operator: rewriting equals the transcribed form",
                    sc.same_function(sc.trace_op(2, H, Route::Engine),
                                     sc.trace_op(2, H, Route::Transcribed)));
  {
    SiegelCalculus sc1(1);
    SiegelExpr H1 = sc1.seed();
    rep.add_pass_fail("trace2.routes_agree_genus1",
                      "order-2 trace operator at genus one: routes agree",
                      sc1.same_function(sc1.trace_op(2, H1, Route::Engine),
                                        sc1.trace_op(2, H1, Route::Transcribed)));
  }
  if (opt.route == Route::Engine) {
    SiegelExpr e4 = sc.trace_op(4, H, Route::Engine, opt.exec);
    SiegelExpr d4 = sc.trace_op(4, H, Route::Transcribed);
    rep.add_pass_fail("trace4.routes_agree",
                      "order-4 trace operator: rewriting equals the transcribed form",
                      sc.same_function(e4, d4));
  }

  // generator action displays
  rep.add_compare("lemma51.B_action", "B_ab H = kappa delta_ab H",
                  (H * PV(VKAPPA)).str(), sc.act_entry(GenKind::B, 1, 1, H).str(),
                  "derived sign is -kappa delta_ab");
  {
    // raising entry carries the -8 pi sandwich
    SiegelExpr ep = sc.act_entry(GenKind::Eplus, 1, 1, H);
    bool has = false;
    for (auto& [k, c] : ep.terms())
      if (k.t_off == 0 && k.d_off == -2) {
        // the pi-linear part of this coefficient is the -8 pi sandwich term
        for (auto& [m, x] : c.terms())
          if (!x.coeff(1).is_zero()) has = true;
      }
    rep.add_pass_fail("lemma51.Eplus_pi_term",
                      "(E+)_ab H contains the -8 pi tau-sandwich translate", has);
  }

  if (opt.kappa == 4) {
    auto suite = sc.casimir_suite(4, opt.route, opt.exec);
    compare_decomposition(rep, "c1", suite.c1, printed_C1());
    compare_decomposition(rep, "c2", suite.c2, printed_C2());
    compare_decomposition(rep, "dplus", suite.dplus, printed_Dplus());
    compare_decomposition(rep, "dminus", suite.dminus, printed_Dminus());

    // infinitesimal character of the holomorphic seed
    std::map<Var, Poly> at00{{VS1, Poly(long(0))}, {VS2, Poly(long(0))}};
    Poly u = PV(VU), v = PV(VV);
    rep.add_compare("invariant.c1_00", "C1 zero-shift at (0,0) equals Lambda(C1) at (2,3)",
                    PC(8).str(), suite.c1.at(0, 0).substitute(at00).str());
    rep.add_compare("invariant.c2_00", "C2 zero-shift at (0,0) equals Lambda(C2) at (2,3)",
                    PC(104).str(), suite.c2.at(0, 0).substitute(at00).str());
    rep.add_compare("invariant.dplus_00",
                    "D+ zero-shift at (0,0) equals (u^2-4)(u^2-9)",
                    ((u * u - PC(4)) * (u * u - PC(9))).str(),
                    suite.dplus.at(0, 0).substitute(at00).str());
    rep.add_compare("invariant.dminus_00",
                    "D- zero-shift at (0,0) equals (v^2-25)(v^2-1)",
                    ((v * v - PC(25)) * (v * v - PC(1))).str(),
                    suite.dminus.at(0, 0).substitute(at00).str());

    // ---- the continuation-proof chain ----
    auto line0 = [&](const Poly& c) {
      return c.substitute({{VS1, Poly(long(0))}, {VS2, (PV(VU) - PC(2)) * PQ(1, 2)}});
    };
    auto line1 = [&](const Poly& c) {
      return c.substitute({{VS1, PC(1)}, {VS2, (PV(VU) - PC(2)) * PQ(1, 2)}});
    };
    Poly s2u = (PV(VU) - PC(2)) * PQ(1, 2);
    rep.add_compare("thm63.s1_0.zero_shift",
                    "C1 on the line s1 = 0: coefficient of the unshifted series",
                    (PC(4) * (PC(2) * s2u * s2u + PC(5) * s2u + PC(8))).str(),
                    line0(suite.c1.at(0, 0)).str());
    rep.add_compare("thm63.s1_0.shift_0_2",
                    "C1 on the line s1 = 0: coefficient of the (u, v+2) translate",
                    (PC(-8) * Ppi() * (u - PC(2))).str(), line0(suite.c1.at(1, 0)).str());
    rep.add_compare("thm63.s1_1.zero_shift",
                    "C1 on the line s1 = 1: coefficient of the unshifted series",
                    (PC(4) * (PC(2) * s2u * s2u + PC(7) * s2u + PC(11))).str(),
                    line1(suite.c1.at(0, 0)).str());
    rep.add_compare("thm63.s1_1.shift_0_2",
                    "C1 on the line s1 = 1: coefficient of the (u, v+2) translate",
                    (PC(-8) * Ppi() * u).str(), line1(suite.c1.at(1, 0)).str());
    rep.add_compare("thm63.s1_1.shift_2_2",
                    "C1 on the line s1 = 1: coefficient of the (u+2, v+2) translate",
                    (PC(32) * Ppi() * detT()).str(), line1(suite.c1.at(-1, 1)).str());

    auto dline = [&](const Poly& c) {
      return line0(c).substitute({{VV, PC(2) * PV(VU) + PC(1)}});
    };
    rep.add_compare("thm63.dminus_line.shift_0_4",
                    "D-(2u+1) on s1 = 0: coefficient of the (u, v+4) translate",
                    (PC(128) * Ppi(2) * u * (u - PC(2))).str(),
                    dline(suite.dminus.at(2, 0)).str());
    rep.add_compare("thm63.dminus_line.shift_0_2",
                    "D-(2u+1) on s1 = 0: coefficient of the (u, v+2) translate",
                    (PC(64) * Ppi() * (u - PC(2)) * (u - PC(1)) * (u + PC(1))).str(),
                    dline(suite.dminus.at(1, 0)).str());
    rep.add_compare("thm63.dminus_line.shift_2_4",
                    "D-(2u+1) on s1 = 0: coefficient of the (u+2, v+4) translate",
                    (PC(-256) * detT() * (u - PC(2)) * (u - PC(2))).str(),
                    dline(suite.dminus.at(0, 1)).str(),
                    "derived value carries pi^2");
    // D+(2) on the line: exactly one translate survives
    {
      bool single = true;
      Poly survivor(long(0));
      for (auto& [k, c] : suite.dplus.coeffs) {
        Poly t = dline(c);
        if (t.is_zero()) continue;
        if (k == ShiftKey{0, 1})
          survivor = t;
        else
          single = false;
      }
      rep.add_compare("thm63.dplus_line.shift_2_4",
                      "D+(u) on s1 = 0 collapses to 64 pi^2 det(tau)(u-2)(u-3) at (u+2, v+4)",
                      (PC(64) * Ppi(2) * detT() * (u - PC(2)) * (u - PC(3))).str(),
                      single ? survivor.str() : "additional translates survived");
    }

    // chain constants from the derived decompositions, then both eliminations
    EliminationChain derived = chain_from_suite(suite);
    auto fmt_chain = [](const EliminationChain& c) {
      std::ostringstream os;
      os << "a1=" << c.a1 << " b1=" << c.b1 << " a2=" << c.a2 << " b2=" << c.b2
         << " c3=" << c.c3 << " d3=" << c.d3;
      return os.str();
    };
    rep.add_compare("thm63.elimination.derived_chain",
                    "scalar relations recomputed from the derived coefficients",
                    fmt_chain(printed_chain()), fmt_chain(derived),
                    "the derived chain closes identically; the printed constants are what "
                    "force Lambda_2^2 in {9, 65}");
    auto printed_rep = lambda_elimination(printed_chain());
    bool printed_ok = !printed_rep.tautological && printed_rep.solutions_x.size() == 2 &&
                      printed_rep.solutions_x[0] == Rat(9) &&
                      printed_rep.solutions_x[1] == Rat(65) &&
                      printed_rep.accepted_lambda2 == std::vector<Rat>{Rat(3)};
    rep.add_pass_fail("thm63.elimination.printed",
                      "printed relations give Lambda_2^2 in {9, 65} and accept Lambda = (2, 3)",
                      printed_ok);
    auto derived_rep = lambda_elimination(derived);
    rep.add_pass_fail("thm63.elimination.tautology",
                      "derived relations close identically (no spectral constraint)",
                      derived_rep.tautological);
  }
  return rep;
}

Report checks_spectral(const CheckOptions& opt, const Suspects& sus) {
  Report rep(sus);
  // the eight tabulated intersections at c = 1
  struct Row {
    RootLabel r;
    CenterSign s;
    LocusKind kind;
    Rat at;
    const char* id;
  };
  Rat c1 = Rat(1);  // the tabulated classification
  std::vector<Row> rows = {
      {RootLabel::A1, CenterSign::Plus, LocusKind::FullLine, c1, "locus.a1_plus"},
      {RootLabel::A2, CenterSign::Plus, LocusKind::TwoPoints, c1 / 2, "locus.a2_plus"},
      {RootLabel::A1A2, CenterSign::Plus, LocusKind::TwoPoints, c1 / 2, "locus.a12_plus"},
      {RootLabel::A1A2A2, CenterSign::Plus, LocusKind::FullLine, c1, "locus.a122_plus"},
      {RootLabel::A1, CenterSign::Minus, LocusKind::TwoPoints, c1, "locus.a1_minus"},
      {RootLabel::A2, CenterSign::Minus, LocusKind::FullLine, c1, "locus.a2_minus"},
      {RootLabel::A1A2, CenterSign::Minus, LocusKind::FullLine, c1, "locus.a12_minus"},
      {RootLabel::A1A2A2, CenterSign::Minus, LocusKind::TwoPoints, c1, "locus.a122_minus"},
  };
  for (auto& r : rows) {
    auto loc = intersect_zero_locus(make_line(r.r, c1), r.s);
    bool ok = loc.kind == r.kind && (loc.kind == LocusKind::Empty || loc.at == r.at);
    rep.add_pass_fail(r.id, std::string("zero locus on the ") + root_name(r.r) + " line", ok);
  }
  auto rp = resolvent_domain(CenterSign::Plus, opt.c_values);
  auto rm = resolvent_domain(CenterSign::Minus, opt.c_values);
  if (opt.c_values == std::vector<Rat>{Rat(1)}) {
    bool has_pole_1 =
        std::find(rp.poles.begin(), rp.poles.end(), Rat(1)) != rp.poles.end();
    rep.add_pass_fail("resolvent.plus", "domain Re u > 1/2 with an order-one pole at u = 1",
                      rp.domain_bound == rat_of(1, 2) && has_pole_1);
    rep.add_pass_fail("resolvent.minus", "domain Re v > 1, holomorphic",
                      rm.domain_bound == Rat(1) && rm.poles.empty());
  } else {
    std::ostringstream os;
    os << "plus bound " << rp.domain_bound << ", " << rp.poles.size()
       << " pole(s); minus bound " << rm.domain_bound;
    rep.add_pass_fail("resolvent.custom", os.str(), true);
  }

  Region A = convergence_cone(2, 4);
  rep.add_compare("region.cone_A", "cone of absolute convergence",
                  Region::quadrant(Rat(2), Rat(5)).str(), A.str());
  std::vector<std::pair<long, long>> dplus = {{4, 0}, {4, 2}, {4, 4}, {2, 0}, {2, 2}, {2, 4}};
  std::vector<std::pair<long, long>> dminus = {{0, 4}, {0, 2}, {2, 2}, {2, 4}};
  rep.add_compare("region.AuB", "concerted region of the plus-family translates",
                  Region::quadrant(Rat(0), Rat(5)).str(),
                  A.unite(shift_closure(dplus, A)).str());
  rep.add_compare("region.AuC", "concerted region of the minus-family translates",
                  Region::quadrant(Rat(2), Rat(3)).str(),
                  A.unite(shift_closure(dminus, A)).str());
  rep.add_compare("region.continuation", "iterated continuation cone",
                  Region::quadrant(rat_of(1, 2), Rat(1)).str(),
                  continuation_region(A, dplus, dminus, rat_of(1, 2), Rat(1)).str());

  // exact restriction identity on the mixed line Lambda = (i t, c)
  {
    UEA U(2);
    HarishChandra hc(U);
    Poly gplus = hc.eval_inf_char(PI_() * PV(VT), PV(VL2), U.center_plus());
    Poly target = -(PV(VL2) * PV(VL2) - PV(VU) * PV(VU)) * (PV(VT) * PV(VT) + PV(VU) * PV(VU));
    rep.add_compare("locus.dplus_mixed_line",
                    "D+(u) at Lambda = (i t, c) equals -(c^2-u^2)(t^2+u^2)", target.str(),
                    gplus.str());
  }
  return rep;
}

Report checks_projection(const Suspects& sus) {
  Report rep(sus);
  GammaValue g2 = gamma_m_product(2, rat_of(5, 2));
  rep.add_compare("gamma.product_52", "Gamma_2(5/2) = (3/4) pi", "3/4*pi",
                  g2.exact && g2.sqrt_pi_power == 2 ? rat_str(g2.coef) + "*pi" : g2.str());
  QuadratureSpec espec;
  espec.rel_tol = 1e-7;
  espec.abs_tol = 0;
  espec.node_budget = 40'000'000;
  for (double s : {2.5, 3.0, 4.0}) {
    auto e = gamma_m_euler(2, s, espec);
    double ref = gamma_m_product(2, s);
    std::ostringstream id;
    id << "gamma.euler_" << s;
    rep.add_pass_fail(id.str(), "Euler integral within 1e-6 of the product formula",
                      std::abs(e.value - ref) <= 1e-6 * std::abs(ref));
  }
  // round trips
  {
    FourierDatum d1{HalfIntegralMatrix(1, {Rat(1)}), HolomorphicDatum{Cplx(1, 0)}};
    auto r1 = sturm_coefficient(1, 12, d1);
    rep.add_pass_fail("sturm.roundtrip_g1_t1", "genus 1, tau = 1: coefficient 1 returns",
                      std::abs(r1.a - Cplx(1, 0)) <= 1e-6);
    FourierDatum d2{HalfIntegralMatrix(1, {Rat(2)}), HolomorphicDatum{Cplx(-24, 0)}};
    auto r2 = sturm_coefficient(1, 12, d2);
    rep.add_pass_fail("sturm.roundtrip_g1_t2", "genus 1, tau = 2: coefficient -24 returns",
                      std::abs(r2.a - Cplx(-24, 0)) <= 1e-6 * 24.0);
    FourierDatum d3{HalfIntegralMatrix::identity(2), HolomorphicDatum{Cplx(1, 0)}};
    auto r3 = sturm_coefficient(2, 4, d3);
    rep.add_pass_fail("sturm.roundtrip_g2_id", "genus 2, identity tau: coefficient 1 returns",
                      std::abs(r3.a - Cplx(1, 0)) <= 1e-6);
    FourierDatum d4{HalfIntegralMatrix(2, {Rat(1), rat_of(1, 2), rat_of(1, 2), Rat(1)}),
                    HolomorphicDatum{Cplx(1, 0)}};
    auto r4 = sturm_coefficient(2, 4, d4);
    rep.add_pass_fail("sturm.roundtrip_g2_half", "genus 2, half-integral tau: coefficient 1",
                      std::abs(r4.a - Cplx(1, 0)) <= 1e-6);
  }
  // truncated series
  {
    Genus1Params p;
    p.kappa = 4;
    p.tau = 1;
    p.s = 0.0;
    std::complex<double> zi(0, 1);
    p.truncation = 20;
    auto v20 = genus1_poincare(zi, p);
    p.truncation = 40;
    auto v40 = genus1_poincare(zi, p);
    rep.add_pass_fail("poincare.self_consistency",
                      "|value(N=40) - value(N=20)| within the N=20 tail bound",
                      std::abs(v40.value - v20.value) <= v20.tail_bound);
    p.truncation = 50;
    auto res = modularity_residual({0, -1, 1, 0}, {0.3, 1.0}, p);
    rep.add_pass_fail("poincare.modularity",
                      "inversion residual within the summed tail bounds",
                      res.residual <= res.allowance);
  }
  // matrix estimates
  {
    bool all = matrix_inequalities({1, 0, 0, 1}, {1, 0, 0, 1}, 2).all();
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100 && all; ++trial) {
      auto spd = [&] {
        double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        return std::vector<double>{a * a + b * b + 0.05, a * c + b * d, a * c + b * d,
                                   c * c + d * d + 0.05};
      };
      all = matrix_inequalities(spd(), spd(), 2).all();
    }
    rep.add_pass_fail("inequalities.spd",
                      "trace and determinant estimates hold with the derivation constants",
                      all);
  }
  return rep;
}

Report checks_all(const CheckOptions& opt, const Suspects& sus) {
  Report rep(sus);
  rep.append(checks_algebra(sus));
  rep.append(checks_hc(sus));
  rep.append(checks_calculus(opt, sus));
  if (opt.genus == 2) {
    CheckOptions g1 = opt;
    g1.genus = 1;
    rep.append(checks_calculus(g1, sus));
  }
  rep.append(checks_spectral(opt, sus));
  rep.append(checks_projection(sus));
  return rep;
}

}  // namespace holoproj
