#include "kvertex/conifold.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "kvertex/character.hpp"

namespace kvertex {

namespace {

const Partition& p1() {
  static const Partition p({1});
  return p;
}

RatFunc inv_bracket(const Monomial& w) {
  return RatFunc(LaurentPoly(Rational(1)), bracket1(w));
}

RatFunc inv_bracket_yxz() {
  return RatFunc(LaurentPoly(Rational(1)),
                 bracket1(Monomial::y()) * bracket1(Monomial::xz()));
}

// (1 - q kappa)/(1 - q/kappa) as a series
QSeries cap_ratio(Orders ord) {
  return (QSeries::one(ord) - QSeries::term(ord, 1, 0, RatFunc(Monomial::kappa()))) *
         geom_inv(ord, 1, Monomial::kappa().inverse());
}

QSeries cap_ratio_inv(Orders ord) {
  return (QSeries::one(ord) -
          QSeries::term(ord, 1, 0, RatFunc(Monomial::kappa().inverse()))) *
         geom_inv(ord, 1, Monomial::kappa());
}

// -q/({w}(1 - q/kappa))
QSeries leg_coeff(Orders ord, const Monomial& w) {
  return QSeries::term(ord, 1, 0, -inv_bracket(w)) *
         geom_inv(ord, 1, Monomial::kappa().inverse());
}

// -q/({y}{xz}) (1 - q kappa)/(1 - q/kappa)
QSeries mixed_coeff(Orders ord) {
  return QSeries::term(ord, 1, 0, -inv_bracket_yxz()) * cap_ratio(ord);
}

SymFunc2 v_seed(Orders ord, int deg_p, int deg_pbar, int which) {
  const Monomial w = which == 1 ? Monomial::y() : Monomial::xz();
  SymFunc2 seed(ord, deg_p, deg_pbar);
  seed.add_term(p1(), Partition(), leg_coeff(ord, w));
  seed.add_term(Partition(), p1(), leg_coeff(ord, w));
  seed.add_term(p1(), p1(), mixed_coeff(ord));
  return seed;
}

SymFunc2 g_inv_seed(Orders ord, int deg) {
  SymFunc2 seed(ord, deg, deg);
  QSeries c = QSeries::term(ord, -1, 1,
                            -RatFunc(bracket1(Monomial::xz()) * bracket1(Monomial::y()))) *
              cap_ratio_inv(ord);
  seed.add_term(p1(), p1(), c);
  return seed;
}

// closed form of the first composition: the p-leg term survives, each
// glued box trades its cap factor for one power of Q
SymFunc2 half_seed(Orders ord, int deg_p, int deg_pbar) {
  SymFunc2 seed(ord, deg_p, deg_pbar);
  seed.add_term(p1(), Partition(), leg_coeff(ord, Monomial::y()));
  seed.add_term(Partition(), p1(),
                QSeries::term(ord, 0, 1, RatFunc(bracket1(Monomial::xz()))) *
                    geom_inv(ord, 1, Monomial::kappa()));
  seed.add_term(p1(), p1(), QSeries::term(ord, 0, 1, RatFunc(1)));
  return seed;
}

// closed form of the full composition: six terms, scalar part included
SymFunc2 composed_seed(Orders ord, int max_deg) {
  const QSeries Q1 = QSeries::term(ord, 0, 1, RatFunc(1));
  SymFunc2 seed(ord, max_deg, max_deg);
  seed.add_term(Partition(), Partition(),
                QSeries::term(ord, 1, 1, RatFunc(-1)) *
                    geom_inv(ord, 1, Monomial::kappa().inverse()) *
                    geom_inv(ord, 1, Monomial::kappa()));
  seed.add_term(p1(), Partition(),
                leg_coeff(ord, Monomial::y()) + Q1 * leg_coeff(ord, Monomial::xz()));
  seed.add_term(Partition(), p1(),
                leg_coeff(ord, Monomial::xz()) + Q1 * leg_coeff(ord, Monomial::y()));
  seed.add_term(p1(), p1(), Q1 * mixed_coeff(ord));
  return seed;
}

// the composed kernel divided by its scalar factor, as a closed seed
SymFunc2 theorem_seed(Orders ord, int max_deg) {
  const RatFunc br_y{bracket1(Monomial::y())};
  const RatFunc br_xz{bracket1(Monomial::xz())};
  SymFunc2 seed(ord, max_deg, max_deg);
  seed.add_term(p1(), Partition(),
                leg_coeff(ord, Monomial::y()) *
                    (QSeries::one(ord) + QSeries::term(ord, 0, 1, br_y / br_xz)));
  seed.add_term(Partition(), p1(),
                leg_coeff(ord, Monomial::xz()) *
                    (QSeries::one(ord) + QSeries::term(ord, 0, 1, br_xz / br_y)));
  seed.add_term(p1(), p1(), QSeries::term(ord, 0, 1, RatFunc(1)) * mixed_coeff(ord));
  return seed;
}

std::string key_str(const SymFunc2::Key& k) {
  return "(p [" + k.first.str() + "], pbar [" + k.second.str() + "])";
}

void require_no_negative_q(const SymFunc2& body, const char* stage) {
  for (const auto& [k, c] : body.terms())
    for (const auto& [ab, r] : c.terms())
      if (ab.first < 0) {
        std::ostringstream os;
        os << "compose_conifold: " << stage << " has a q^" << ab.first << " Q^"
           << ab.second << " term at " << key_str(k)
           << "; composed coefficients must be series in q";
        throw std::runtime_error(os.str());
      }
}

void require_body_matches(const SymFunc2& got, const SymFunc2& want, const char* stage) {
  if (got == want) return;
  std::set<SymFunc2::Key> keys;
  for (const auto& [k, c] : got.terms()) keys.insert(k);
  for (const auto& [k, c] : want.terms()) keys.insert(k);
  for (const auto& k : keys) {
    QSeries g = got.coeff(k.first, k.second), w = want.coeff(k.first, k.second);
    if (g == w) continue;
    std::set<std::pair<int, int>> exps;
    for (const auto& [ab, c] : g.terms()) exps.insert(ab);
    for (const auto& [ab, c] : w.terms()) exps.insert(ab);
    for (auto [a, b] : exps) {
      RatFunc cg = g.coeff(a, b), cw = w.coeff(a, b);
      if (cg == cw) continue;
      std::ostringstream os;
      os << "compose_conifold: " << stage << " differs from its closed form at "
         << key_str(k) << " q^" << a << " Q^" << b << ": got " << cg.str()
         << ", want " << cw.str();
      throw std::runtime_error(os.str());
    }
  }
  throw std::logic_error("compose_conifold: bodies differ outside their coefficients");
}

}  // namespace

Kernel v_kernel(int which, int nq, int max_deg) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("v_kernel: which must be 1 or 2");
  Orders ord{nq, 0};
  return Kernel{plet_exp(v_seed(ord, max_deg, max_deg, which))};
}

Kernel g_inv_kernel(int nq, int nQ) {
  Orders ord{nq, nQ};
  return Kernel{plet_exp(g_inv_seed(ord, nQ))};
}

QSeries z_conifold(int nq, int nQ) {
  Orders ord{nq, nQ};
  return scalar_exp(QSeries::term(ord, 1, 1, RatFunc(-1)) *
                    geom_inv(ord, 1, Monomial::kappa().inverse()) *
                    geom_inv(ord, 1, Monomial::kappa()));
}

ConifoldKernel compose_conifold(int nq, int nQ, int max_deg) {
  const Orders ord{nq, nQ};
  const int mid = nQ;  // each glued box carries one power of Q
  Kernel va{plet_exp(v_seed(ord, max_deg, mid, 1))};
  Kernel ginv{plet_exp(g_inv_seed(ord, mid))};
  Kernel vb{plet_exp(v_seed(ord, mid, max_deg, 2))};
  Kernel half = contract(va, ginv);
  require_no_negative_q(half.body, "first composition");
  require_body_matches(half.body, plet_exp(half_seed(ord, max_deg, mid)),
                       "first composition");
  Kernel full = contract(half, vb);
  require_no_negative_q(full.body, "full composition");
  SymFunc2 seed = composed_seed(ord, max_deg);
  require_body_matches(full.body, plet_exp(seed), "full composition");
  ConifoldKernel out;
  out.kernel = std::move(full);
  out.seed = std::move(seed);
  out.z = z_conifold(nq, nQ);
  out.max_deg = max_deg;
  return out;
}

bool conifold_theorem_check(int nq, int nQ, int max_deg) {
  ConifoldKernel ck = compose_conifold(nq, nQ, max_deg);
  const Orders ord{nq, nQ};
  if (ck.kernel.body != plet_exp(theorem_seed(ord, max_deg)).scaled(ck.z)) return false;
  return ck.kernel.body.truncated({nq, 0}) ==
         plet_exp(theorem_seed(Orders{nq, 0}, max_deg));
}

}  // namespace kvertex
