#include "kvertex/vertex.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kvertex/character.hpp"

namespace kvertex {

const char* to_string(TwoLegVariant v) {
  return v == TwoLegVariant::as_printed ? "as-printed" : "lemma-form";
}

namespace {

RatFunc one_minus(const Monomial& m) {
  return RatFunc(LaurentPoly(Rational(1)) - LaurentPoly(m));
}

RatFunc inv_bracket_y() {
  return RatFunc(LaurentPoly(Rational(1)), bracket1(Monomial::y()));
}

RatFunc inv_bracket_yxz() {
  return RatFunc(LaurentPoly(Rational(1)),
                 bracket1(Monomial::y()) * bracket1(Monomial::xz()));
}

// -q / ({y}(1 - q/kappa)), the one-leg coefficient
QSeries coeff_A(Orders ord) {
  return QSeries::term(ord, 1, 0, -inv_bracket_y()) *
         geom_inv(ord, 1, Monomial::kappa().inverse());
}

// R = (1 - q kappa)/(1 - q/kappa)
QSeries ratio_R(Orders ord) {
  QSeries num = QSeries::one(ord) - QSeries::term(ord, 1, 0, RatFunc(Monomial::kappa()));
  return num * geom_inv(ord, 1, Monomial::kappa().inverse());
}

// 1/R = (1 - q/kappa)/(1 - q kappa)
QSeries ratio_R_inv(Orders ord) {
  QSeries num =
      QSeries::one(ord) - QSeries::term(ord, 1, 0, RatFunc(Monomial::kappa().inverse()));
  return num * geom_inv(ord, 1, Monomial::kappa());
}

VertexFormula make_formula(std::string name, SymFunc2 seed) {
  VertexFormula f;
  f.name = std::move(name);
  f.body = plet_exp(seed);
  f.seed = std::move(seed);
  return f;
}

}  // namespace

VertexFormula one_leg(Orders ord, int max_deg) {
  SymFunc seed(ord, max_deg);
  seed.add_term(Partition({1}), coeff_A(ord));
  return make_formula("one-leg", SymFunc2::from_p(seed, 0));
}

VertexFormula two_leg(Orders ord, int max_deg, TwoLegVariant v) {
  SymFunc2 seed(ord, max_deg, max_deg);
  const Partition p1({1});
  if (v == TwoLegVariant::as_printed) {
    QSeries a = coeff_A(ord);
    seed.add_term(p1, Partition(), a);
    seed.add_term(Partition(), p1, a);
    seed.add_term(p1, p1, QSeries::term(ord, 1, 0, -inv_bracket_yxz()) * ratio_R(ord));
  } else {
    seed.add_term(Partition(), p1,
                  QSeries::term(ord, 1, 0, -inv_bracket_y()) *
                      geom_inv(ord, 1, Monomial::kappa()));
    seed.add_term(p1, p1, QSeries::term(ord, 1, 0, -inv_bracket_yxz()));
  }
  return make_formula(std::string("two-leg/") + to_string(v), std::move(seed));
}

VertexFormula gluing(Orders ord, int max_deg) {
  SymFunc2 seed(ord, max_deg, max_deg);
  seed.add_term(Partition({1}), Partition({1}), ratio_R(ord));
  return make_formula("gluing", std::move(seed));
}

VertexFormula gluing_inv(Orders ord, int max_deg) {
  SymFunc2 seed(ord, max_deg, max_deg);
  seed.add_term(Partition({1}), Partition({1}), ratio_R_inv(ord));
  return make_formula("gluing-inv", std::move(seed));
}

SymFunc stab(Orders ord, const Partition& la) {
  const int n = la.size();
  SymFunc s = SymFunc::schur(ord, n, la).substituted([ord](int k) {
    return QSeries::constant(ord, one_minus(Monomial::xz(k)).inverse());
  });
  // y^{n/2} (xz)^{n - n^2/2}, doubled exponents {2n - n^2, n, 2n - n^2}
  return s.scaled(RatFunc(Monomial{2 * n - n * n, n, 2 * n - n * n}));
}

QSeries khall_pair(const SymFunc& f, const SymFunc& g) {
  Orders ord = f.orders().min(g.orders());
  SymFunc fs = f.substituted([ord](int k) {
                  return QSeries::constant(ord, one_minus(Monomial::xz(-k)));
                }).coeff_bar();
  SymFunc gs = g.substituted(
      [ord](int k) { return QSeries::constant(ord, one_minus(Monomial::y(k))); });
  return hall(fs, gs);
}

namespace {

Partition remove_part(const Partition& mu, int n) {
  std::vector<int> parts = mu.parts();
  parts.erase(std::find(parts.begin(), parts.end(), n));
  return Partition(std::move(parts));
}

int multiplicity(const Partition& mu, int n) {
  return static_cast<int>(std::count(mu.parts().begin(), mu.parts().end(), n));
}

// sum_n n (1-(xz)^n)(1-y^n) d/dp_n d/dpbar_n, scaled by 1/k (for the exp)
SymFunc2 lowering_step(const SymFunc2& h, int k) {
  SymFunc2 r(h.orders(), h.deg_p(), h.deg_pbar());
  for (const auto& [key, c] : h.terms()) {
    const Partition& mu = key.first;
    const Partition& nu = key.second;
    int prev = 0;
    for (int n : mu.parts()) {
      if (n == prev) continue;
      prev = n;
      int mn = multiplicity(nu, n);
      if (mn == 0) continue;
      int mm = multiplicity(mu, n);
      RatFunc cn = RatFunc(Rational(static_cast<long>(n) * mm * mn, k)) *
                   one_minus(Monomial::xz(n)) * one_minus(Monomial::y(n));
      r.add_term(remove_part(mu, n), remove_part(nu, n), c.scaled(cn));
    }
  }
  return r;
}

}  // namespace

QSeries khall_pair_derivation(const SymFunc& f, const SymFunc& g) {
  SymFunc2 h = SymFunc2::outer(f.coeff_bar(), g);
  SymFunc2 acc = h;
  QSeries out = h.coeff(Partition(), Partition());
  int kmax = std::min(h.deg_p(), h.deg_pbar());
  for (int k = 1; k <= kmax && !acc.is_zero(); ++k) {
    acc = lowering_step(acc, k);
    out += acc.coeff(Partition(), Partition());
  }
  return out;
}

QSeries khall_pair2(const SymFunc2& f, const SymFunc2& g) {
  Orders ord = f.orders().min(g.orders());
  auto c = [ord](const RatFunc& r) { return QSeries::constant(ord, r); };
  SymFunc2 fs = f.substituted_p([&](int k) { return c(one_minus(Monomial::y(-k))); })
                    .substituted_pbar([&](int k) { return c(one_minus(Monomial::xz(-k))); })
                    .coeff_bar();
  SymFunc2 gs = g.substituted_p([&](int k) { return c(-one_minus(Monomial::xz(k))); })
                    .substituted_pbar([&](int k) { return c(-one_minus(Monomial::y(k))); });
  return hall2(fs, gs);
}

bool one_leg_chain_check(const Partition& la, int nq) {
  const Orders ord{nq, 0};
  const int n = la.size();
  SymFunc st = stab(ord, la).scaled(RatFunc(Monomial{n * n, 0, n * n}));  // (xz)^{n^2/2}
  SymFunc body = one_leg(ord, n).body.slice_p();
  QSeries lhs = khall_pair(st, body);
  QSeries rhs = SymFunc::schur(ord, n, la).evaluated([&](int k) {
    return QSeries::term(ord, k, 0, RatFunc(-1)) *
           geom_inv(ord, k, Monomial::kappa(-k));
  });
  return lhs == rhs;
}

namespace {

// two-leg seed with the outgoing alphabet regraded by q^{-deg}: each
// p_1-carrying term loses one power of q (built from the closed forms, so
// no truncation order is lost to the shift)
SymFunc2 regraded_two_leg_seed(Orders ord, int max_deg, TwoLegVariant v) {
  SymFunc2 seed(ord, max_deg, max_deg);
  const Partition p1({1});
  if (v == TwoLegVariant::as_printed) {
    QSeries a_shift =
        QSeries::constant(ord, -inv_bracket_y()) * geom_inv(ord, 1, Monomial::kappa().inverse());
    seed.add_term(p1, Partition(), a_shift);
    seed.add_term(Partition(), p1, coeff_A(ord));
    seed.add_term(p1, p1, QSeries::constant(ord, -inv_bracket_yxz()) * ratio_R(ord));
  } else {
    seed.add_term(Partition(), p1,
                  QSeries::term(ord, 1, 0, -inv_bracket_y()) *
                      geom_inv(ord, 1, Monomial::kappa()));
    seed.add_term(p1, p1, QSeries::constant(ord, -inv_bracket_yxz()));
  }
  return seed;
}

}  // namespace

PairingVerdict two_leg_pairing_check(const Partition& la, const Partition& mu, int nq,
                                     TwoLegVariant v) {
  const Orders ord{nq, 0};
  const int nl = la.size(), nm = mu.size();
  SymFunc fla = SymFunc::schur(ord, nl, la)
                    .substituted([ord](int k) {
                      return QSeries::constant(ord, one_minus(Monomial::y(k)).inverse());
                    })
                    .scaled(RatFunc(Monomial{0, -nl, 0}));  // y^{-n/2}
  SymFunc fmu = SymFunc::schur(ord, nm, mu).substituted([ord](int k) {
    return QSeries::constant(ord, one_minus(Monomial::xz(-k)).inverse());
  });
  QSeries lhs = khall_pair2(SymFunc2::outer(fla, fmu),
                            plet_exp(regraded_two_leg_seed(ord, std::max(nl, nm), v)));
  QSeries rhs = skew_schur(ord, nm, mu, la)
                    .evaluated([&](int k) {
                      return QSeries::term(ord, k, 0, RatFunc(-1)) *
                             geom_inv(ord, k, Monomial::kappa(k));
                    })
                    .scaled(RatFunc(Monomial::kappa(nl)));
  PairingVerdict out;
  out.prefactor = RatFunc(1);
  if (lhs.is_zero() || rhs.is_zero()) {
    out.passed = lhs.is_zero() && rhs.is_zero();
    return out;
  }
  auto lo_l = *lhs.terms().begin();
  auto lo_r = *rhs.terms().begin();
  if (lo_l.first != lo_r.first) {
    out.passed = false;
    return out;
  }
  RatFunc c = lo_l.second / lo_r.second;
  out.prefactor = c;
  // The prefactor must be a plain rational times a monomial, not q-dependent.
  // Coefficient ratios come out unreduced (no multivariate gcd), so test by
  // exact division instead of inspecting the stored numerator/denominator.
  std::optional<LaurentPoly> red = c.num().exact_divide(c.den());
  bool monomial_c = red.has_value() && red->is_single_term();
  if (monomial_c) {
    c = RatFunc(*red);
    out.prefactor = c;
  }
  out.passed = monomial_c && lhs == rhs.scaled(c);
  return out;
}

bool q_polynomiality_check(const Kernel& k, const Partition& la, const Partition& mu,
                           int nQ) {
  const Orders hi = k.body.orders();
  if (nQ < 1 || hi.nQ != nQ)
    throw std::invalid_argument("q_polynomiality_check: kernel must carry Q-order nQ >= 1");

  QSeries r = matrix_element(k, la, mu) * matrix_element(k, Partition(), Partition()).inverse();

  // Each box of la or mu can absorb at most one power of Q, so the
  // normalized element is a Q-polynomial of degree at most |la| + |mu|.
  const int dmax = la.size() + mu.size();
  for (const auto& [ab, c] : r.terms())
    if (ab.second > dmax) return false;

  // The surviving coefficients must be stable under the truncation order:
  // recomputing one Q-order lower has to reproduce the truncation of r.
  const Orders lo{hi.nq, nQ - 1};
  Kernel klo{k.body.truncated(lo)};
  QSeries r_lo =
      matrix_element(klo, la, mu) * matrix_element(klo, Partition(), Partition()).inverse();
  return r.truncated(lo) == r_lo;
}

}  // namespace kvertex
