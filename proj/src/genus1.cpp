#include "holoproj/genus1.hpp"

namespace holoproj {

namespace {
void add_into(Genus1Classical::Expr& e, int k, const Poly& c) {
  if (c.is_zero()) return;
  auto it = e.find(k);
  if (it == e.end()) {
    e[k] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}
}  // namespace

Genus1Classical::Expr Genus1Classical::dx(const Expr& f) const {
  Expr out;
  Poly rule = Poly(RingElem::pi() * RingElem(2) * RingElem::i()) * PV(VT11);
  for (auto& [k, c] : f) add_into(out, k, c * rule);
  return out;
}

Genus1Classical::Expr Genus1Classical::dtheta(const Expr& f) const {
  Expr out;
  Poly rule = Poly(RingElem::i() * RingElem(kappa_));
  for (auto& [k, c] : f) add_into(out, k, c * rule);
  return out;
}

Genus1Classical::Expr Genus1Classical::dy(const Expr& f) const {
  Expr out;
  Poly erule = Poly(-(RingElem::pi() * RingElem(2))) * PV(VT11);
  Poly half = PQ(long(kappa_ - 1), 2);
  for (auto& [k, c] : f) {
    // power rule on y^{(kappa-1)/2 + s + k}
    add_into(out, k - 1, c * (half + PV(VS) + PC(k)));
    add_into(out, k, c * erule);
  }
  return out;
}

Genus1Classical::Expr Genus1Classical::mul_y(const Expr& f, int power) const {
  Expr out;
  for (auto& [k, c] : f) add_into(out, k + power, c);
  return out;
}

Genus1Classical::Expr Genus1Classical::add(const Expr& a, const Expr& b) const {
  Expr out = a;
  for (auto& [k, c] : b) add_into(out, k, c);
  return out;
}

Genus1Classical::Expr Genus1Classical::scale(const Expr& f, const Poly& c) const {
  Expr out;
  for (auto& [k, x] : f) add_into(out, k, x * c);
  return out;
}

Genus1Classical::Expr Genus1Classical::casimir(const Expr& f) const {
  Expr lap = add(dx(dx(f)), dy(dy(f)));
  Expr out = scale(mul_y(lap, 2), PC(4));
  Expr mixed = dtheta(dx(f));
  out = add(out, scale(mul_y(mixed, 1), PC(-4)));
  return out;
}

}  // namespace holoproj
