#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "kvertex/fock.hpp"

using namespace kvertex;

namespace {

std::mt19937 rng(4242);

SymFunc random_state(Orders ord, int max_deg, int deg_cap) {
  std::uniform_int_distribution<int> deg(0, deg_cap), e(-2, 2), num(-4, 4), den(1, 3);
  SymFunc f(ord, max_deg);
  for (int t = 0; t < 3; ++t) {
    auto parts = enumerate_partitions(deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    f.add_term(parts[pick(rng)],
               QSeries::constant(ord, RatFunc(LaurentPoly(Monomial{e(rng), e(rng), e(rng)},
                                                          Rational(num(rng), den(rng))))));
  }
  return f;
}

}  // namespace

TEST_CASE("gamma operators on simple states") {
  Orders ord{3, 0};
  // Gamma_-(1) p_1 = p_1 + 1
  SymFunc p1 = SymFunc::p(ord, 3, Partition({1}));
  SymFunc out = gamma_minus(QSeries::one(ord), p1);
  CHECK(out == p1 + SymFunc::one(ord, 3));

  // Gamma_+(z) 1 at nq = 0 with z of positive q-order is 1
  Orders o0{0, 0};
  QSeries z = QSeries::term(o0, 1, 0, RatFunc(1));
  CHECK(z.is_zero());  // q truncated away at nq = 0
  CHECK(gamma_plus(z, SymFunc::one(o0, 2)) == SymFunc::one(o0, 2));

  // Gamma_+(w) 1 = sum_n w^n h_n
  QSeries w = QSeries::term(ord, 1, 0, RatFunc(1));
  SymFunc gp = gamma_plus(w, SymFunc::one(ord, 3));
  for (int n = 0; n <= 3; ++n)
    for (const auto& mu : enumerate_partitions(n))
      CHECK(gp.coeff(mu) == QSeries::term(ord, n, 0, RatFunc(z_of(mu).inverse())));
}

TEST_CASE("gamma operators commute within a family") {
  Orders ord{3, 0};
  QSeries z = QSeries::term(ord, 1, 0, RatFunc(Monomial::y()));
  QSeries w = QSeries::term(ord, 1, 0, RatFunc(Monomial::xz(-1)));
  for (int i = 0; i < 4; ++i) {
    SymFunc f = random_state(ord, 5, 2);
    CHECK(gamma_plus(z, gamma_plus(w, f)) == gamma_plus(w, gamma_plus(z, f)));
    CHECK(gamma_minus(z, gamma_minus(w, f)) == gamma_minus(w, gamma_minus(z, f)));
  }
}

TEST_CASE("gamma_minus is the Hall adjoint of gamma_plus") {
  Orders ord{3, 0};
  QSeries z = QSeries::term(ord, 1, 0, RatFunc(Monomial::y()));
  for (int i = 0; i < 6; ++i) {
    SymFunc f = random_state(ord, 6, 3), g = random_state(ord, 6, 3);
    CHECK(hall(gamma_minus(z, f), g) == hall(f, gamma_plus(z, g)));
  }
}

TEST_CASE("gamma commutation relation") {
  // Gamma_-(w) Gamma_+(z) = (1 - zw)^{-1} Gamma_+(z) Gamma_-(w); with z, w
  // of q-order >= 1 and max_deg >= deg f + nq the truncation loses nothing
  Orders ord{3, 0};
  QSeries z = QSeries::term(ord, 1, 0, RatFunc(Monomial::y()));
  QSeries w = QSeries::term(ord, 1, 0, RatFunc(Monomial::kappa(-1)));
  QSeries comm = (QSeries::one(ord) - z * w).inverse();
  for (int i = 0; i < 6; ++i) {
    SymFunc f = random_state(ord, 5, 2);
    SymFunc lhs = gamma_minus(w, gamma_plus(z, f));
    SymFunc rhs = gamma_plus(z, gamma_minus(w, f)).scaled(comm);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("kernel contraction") {
  Orders ord{3, 0};
  // Exp(a p_1 pbar_1) Exp(b p_1 pbar_1) = Exp(ab p_1 pbar_1)
  QSeries a = QSeries::constant(ord, RatFunc(LaurentPoly(Monomial::one(), Rational(1)))) -
              QSeries::term(ord, 1, 0, RatFunc(Monomial::kappa()));
  QSeries b = QSeries::term(ord, 1, 0, RatFunc(Monomial::kappa(-1)));
  auto mk = [&](const QSeries& c) {
    SymFunc2 seed(ord, 3, 3);
    seed.add_term(Partition({1}), Partition({1}), c);
    return Kernel{plet_exp(seed)};
  };
  Kernel lhs = contract(mk(a), mk(b));
  CHECK(lhs.body == mk(a * b).body);

  // the Cauchy kernel is the identity for contraction
  Kernel id = cauchy_kernel(ord, 3);
  SymFunc2 seed(ord, 3, 3);
  seed.add_term(Partition({1}), Partition(), QSeries::term(ord, 1, 0, RatFunc(Monomial::y())));
  seed.add_term(Partition({1}), Partition({1}),
                QSeries::constant(ord, RatFunc(LaurentPoly(Monomial::xz(), Rational(-1, 2)))));
  seed.add_term(Partition(), Partition({2}), QSeries::term(ord, 2, 0, RatFunc(1)));
  Kernel k{plet_exp(seed)};
  CHECK(contract(k, id).body == k.body);
  CHECK(contract(id, k).body == k.body);

  CHECK_THROWS_AS(contract(k, cauchy_kernel(ord, 2)), std::invalid_argument);
}

TEST_CASE("matrix elements") {
  Orders ord{3, 0};
  // <empty, s_(n)| Exp(c pbar_1) = c^n
  QSeries c = QSeries::term(ord, 1, 0, RatFunc(Monomial::y()));
  SymFunc2 seed(ord, 0, 3);
  seed.add_term(Partition(), Partition({1}), c);
  Kernel k{plet_exp(seed)};
  for (int n = 0; n <= 3; ++n) {
    QSeries me = matrix_element(k, Partition(), Partition(n ? std::vector<int>{n} : std::vector<int>{}));
    QSeries cn = QSeries::one(ord);
    for (int i = 0; i < n; ++i) cn *= c;
    CHECK(me == cn);
  }

  // <s_la, s_mu| Cauchy = delta
  Kernel id = cauchy_kernel(ord, 3);
  for (const auto& la : partitions_up_to(3))
    for (const auto& mu : partitions_up_to(3))
      CHECK(matrix_element(id, la, mu) ==
            (la == mu ? QSeries::one(ord) : QSeries(ord)));
}

TEST_CASE("refined series examples") {
  int nq = 4;
  Orders ord{nq, 0};
  CHECK(refined_P(Partition(), Partition(), nq) == QSeries::one(ord));
  CHECK(refined_P(Partition({1}), Partition(), nq) == geom_inv(ord, 1, Monomial::kappa(-1)));
  CHECK(refined_P(Partition(), Partition({1}), nq) ==
        QSeries::term(ord, 1, 0, RatFunc(Monomial::kappa())) * geom_inv(ord, 1, Monomial::kappa()));
  CHECK(refined_P(Partition({1}), Partition({1}), nq) ==
        QSeries::one(ord) + QSeries::term(ord, 1, 0, RatFunc(Monomial::kappa())) *
                                geom_inv(ord, 1, Monomial::kappa()) *
                                geom_inv(ord, 1, Monomial::kappa(-1)));
}

TEST_CASE("gamma product assembly of the refined series") {
  int nq = 3;
  for (const auto& la : partitions_up_to(2))
    for (const auto& mu : partitions_up_to(2))
      CHECK(refined_P_gamma(la, mu, nq) == refined_P(la, mu, nq));
}

TEST_CASE("refined prefactor") {
  CHECK(refined_prefactor(Partition(), Partition({3, 1})) == RatFunc(1));
  CHECK(refined_prefactor(Partition({2, 1}), Partition()) == RatFunc(1));
  CHECK(refined_prefactor(Partition({1}), Partition({1})) ==
        -RatFunc(Monomial::kappa(-1)));
  CHECK(refined_prefactor(Partition({2}), Partition({1})) ==
        -RatFunc(Monomial::kappa(-1)));
  CHECK(refined_prefactor(Partition({1, 1}), Partition({1})) == RatFunc(1));
}
