#include "kvertex/fock.hpp"

#include <stdexcept>

namespace kvertex {

SymFunc gamma_plus(const QSeries& zval, const SymFunc& state) {
  Orders ord = state.orders();
  SymFunc g(ord, state.max_deg());
  std::vector<QSeries> zpow{QSeries::one(ord)};
  for (int n = 1; n <= state.max_deg(); ++n) zpow.push_back(zpow.back() * zval);
  for (const auto& mu : partitions_up_to(state.max_deg())) {
    const QSeries& zp = zpow[mu.size()];
    if (zp.is_zero()) continue;
    g.add_term(mu, zp.scaled(RatFunc(z_of(mu).inverse())));
  }
  return g * state;
}

namespace {

// sum_n z^n d/dp_n, one application
SymFunc lowering_derivation(const std::vector<QSeries>& zpow, const SymFunc& f) {
  SymFunc out(f.orders(), f.max_deg());
  for (const auto& [mu, c] : f.terms()) {
    int prev = 0;
    for (int i = 0; i < mu.length(); ++i) {
      int n = mu.parts()[i];
      if (n == prev) continue;  // each distinct part once
      prev = n;
      int m = 0;
      for (int p : mu.parts())
        if (p == n) ++m;
      if (zpow[n].is_zero()) continue;
      std::vector<int> rest;
      bool removed = false;
      for (int p : mu.parts()) {
        if (p == n && !removed) {
          removed = true;
          continue;
        }
        rest.push_back(p);
      }
      out.add_term(Partition(std::move(rest)), (c * zpow[n]).scaled(RatFunc(Rational(m))));
    }
  }
  return out;
}

}  // namespace

SymFunc gamma_minus(const QSeries& zval, const SymFunc& state) {
  Orders ord = state.orders();
  std::vector<QSeries> zpow{QSeries::one(ord)};
  for (int n = 1; n <= state.max_deg(); ++n) zpow.push_back(zpow.back() * zval);
  SymFunc acc = state, cur = state;
  for (int k = 1; !cur.is_zero() && k <= state.max_deg() + 1; ++k) {
    cur = lowering_derivation(zpow, cur).scaled(RatFunc(Rational(1, k)));
    acc += cur;
  }
  return acc;
}

Kernel contract(const Kernel& k1, const Kernel& k2) {
  if (k1.body.deg_pbar() != k2.body.deg_p())
    throw std::invalid_argument("contract: middle alphabet degree bounds differ");
  Orders ord = k1.body.orders().min(k2.body.orders());
  // index K2 by its outgoing partition
  std::map<Partition, std::vector<std::pair<Partition, QSeries>>> by_out;
  for (const auto& [key, c] : k2.body.terms()) by_out[key.first].emplace_back(key.second, c);
  SymFunc2 out(ord, k1.body.deg_p(), k2.body.deg_pbar());
  for (const auto& [key, c1] : k1.body.terms()) {
    auto it = by_out.find(key.second);
    if (it == by_out.end()) continue;
    RatFunc zmu(z_of(key.second));
    for (const auto& [sigma, c2] : it->second)
      out.add_term(key.first, sigma, (c1 * c2).scaled(zmu));
  }
  return Kernel{std::move(out)};
}

QSeries matrix_element(const Kernel& k, const Partition& la, const Partition& mu) {
  Orders ord = k.body.orders();
  return hall2(SymFunc2::outer(SymFunc::schur(ord, la.size(), la),
                               SymFunc::schur(ord, mu.size(), mu)),
               k.body);
}

Kernel cauchy_kernel(Orders ord, int max_deg) {
  SymFunc2 seed(ord, max_deg, max_deg);
  seed.add_term(Partition({1}), Partition({1}), QSeries::one(ord));
  return Kernel{plet_exp(seed)};
}

namespace {

// p_k of the principal alphabet 1, t, t^2, ... : 1/(1 - t^k)
QSeries principal_with_one(Orders ord, int k, const Monomial& m) {
  return geom_inv(ord, k, m.pow(k));
}

// p_k of the alphabet u, u^2, ... : u^k/(1 - u^k)
QSeries principal_without_one(Orders ord, int k, const Monomial& m) {
  return QSeries::term(ord, k, 0, RatFunc(m.pow(k))) * geom_inv(ord, k, m.pow(k));
}

}  // namespace

QSeries refined_P(const Partition& la, const Partition& mu, int nq) {
  Orders ord{nq, 0};
  QSeries out(ord);
  // t = q/kappa on the la side, u = q kappa on the mu side
  auto rule_t = [&](int k) { return principal_with_one(ord, k, Monomial::kappa(-1)); };
  auto rule_u = [&](int k) { return principal_without_one(ord, k, Monomial::kappa(1)); };
  for (const auto& eta : partitions_up_to(std::min(la.size(), mu.size()))) {
    if (!la.contains(eta) || !mu.contains(eta)) continue;
    QSeries a = skew_schur(ord, la.size(), la, eta).evaluated(rule_t);
    QSeries b = skew_schur(ord, mu.size(), mu, eta).evaluated(rule_u);
    out += a * b;
  }
  return out;
}

QSeries refined_P_gamma(const Partition& la, const Partition& mu, int nq) {
  Orders ord{nq, 0};
  SymFunc a = SymFunc::schur(ord, la.size(), la);
  for (int i = 0; i <= nq; ++i)
    a = gamma_minus(QSeries::term(ord, i, 0, RatFunc(Monomial::kappa(-i))), a);
  SymFunc b = SymFunc::schur(ord, mu.size(), mu);
  for (int j = 1; j <= nq; ++j)
    b = gamma_minus(QSeries::term(ord, j, 0, RatFunc(Monomial::kappa(j))), b);
  return hall(a, b);
}

RatFunc refined_prefactor(const Partition& la, const Partition& mu) {
  int boxes = 0, kexp = 0;
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < la.length(); ++j) {
      int depth = std::min(la.part(j), mu.part(i));
      boxes += depth;
      kexp += (i < j ? 1 : -1) * depth;
    }
  LaurentPoly p(Monomial::kappa(kexp), Rational(boxes % 2 == 0 ? 1 : -1));
  return RatFunc(p);
}

}  // namespace kvertex
